#include <gtest/gtest.h>

#include "aqs/appendix.hpp"
#include "aqs/error.hpp"
#include "test_support.hpp"

using namespace aqs;
using aqs::testing::orthogonal;
using aqs::testing::Fixture;

namespace {

const ProtocolParams kParams = ProtocolParams::defaults();

RunResult run_once(std::uint64_t seed, const RunOptions& options = {},
                   std::size_t message_bits = kParams.n) {
  Fixture s(seed, kParams.n2, message_bits);
  ProtocolContext ctx(kParams);
  return appendix::run(s.message, s.parties, options, ctx, s.run_seed);
}

std::string mu_a_of(const Transcript& t) {
  for (const auto& e : t.events()) {
    if (e.kind == EventKind::Measurement && e.label == "check") return e.fields.at("mu_a");
  }
  return "";
}

std::pair<std::size_t, std::size_t> sent(const Transcript& t) {
  std::size_t q = 0, b = 0;
  for (const auto& e : t.events()) {
    q += e.qubits;
    b += e.bits;
  }
  return {q, b};
}

}  // namespace

TEST(AppendixSign, MaskIsXorWithH3) {
  ProtocolContext ctx(kParams);
  ctx.hash.force_zero(HashFn::H3);
  Fixture s(1, kParams.n2, kParams.n);
  RandomSource rng(1);
  auto& key = s.parties.signer_key();
  auto sig = appendix::sign(s.message, key, s.parties.ids().signer, ctx, rng);
  auto halves = split(decode_conjugate(key.key, sig.s_a, rng), {kParams.l, kParams.m3});
  EXPECT_EQ(halves[0], sig.nonce);
  EXPECT_EQ(halves[1], concat({sig.nonce, s.parties.ids().signer.bits()}));
}

TEST(AppendixSign, LengthIndependentOfMessage) {
  ProtocolContext ctx(kParams);
  for (std::size_t bits : {1u, 32u, 8192u}) {
    Fixture s(2, kParams.n2, bits);
    RandomSource rng(2);
    auto sig = appendix::sign(s.message, s.parties.signer_key(), s.parties.ids().signer, ctx, rng);
    EXPECT_EQ(sig.s_a.size(), kParams.n2);
  }
}

TEST(AppendixArbitrate, KibibyteMessageVerifies) {
  ProtocolContext ctx(kParams);
  Fixture s(3, kParams.n2, 8192);
  RandomSource rng(3);
  const auto& ids = s.parties.ids();
  auto sig = appendix::sign(s.message, s.parties.signer_key(), ids.signer, ctx, rng);
  auto ch = appendix::receiver_challenge(s.parties.receiver_key(), ids.receiver, ctx, rng);
  ASSERT_EQ(ch.y_b.size(), kParams.n2);
  auto out = appendix::arbitrate(sig.s_a, ch.y_b, s.message, s.parties.signer_key(),
                                 s.parties.receiver_key(), ids, ctx, rng);
  auto* r = std::get_if<appendix::ArbitratorResponse>(&out);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->mu_a, 1);
  EXPECT_EQ(r->mu_b, 1);
}

TEST(AppendixArbitrate, WrongReceiverKeyRejected) {
  ProtocolContext ctx(kParams);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Fixture s(seed, kParams.n2, kParams.n);
    RandomSource rng(seed);
    const auto& ids = s.parties.ids();
    KeyRecord wrong{ids.receiver, random_bits(kParams.n2, rng)};
    auto sig = appendix::sign(s.message, s.parties.signer_key(), ids.signer, ctx, rng);
    auto ch = appendix::receiver_challenge(wrong, ids.receiver, ctx, rng);
    auto out = appendix::arbitrate(sig.s_a, ch.y_b, s.message, s.parties.signer_key(),
                                   s.parties.receiver_key(), ids, ctx, rng);
    EXPECT_TRUE(std::holds_alternative<appendix::ArbitratorReject>(out)) << seed;
  }
}

TEST(AppendixArbitrate, NonceFlipBreaksSelfConsistency) {
  ProtocolContext ctx(kParams);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Fixture s(seed, kParams.n2, kParams.n);
    RandomSource rng(seed);
    const auto& ids = s.parties.ids();
    auto sig = appendix::sign(s.message, s.parties.signer_key(), ids.signer, ctx, rng);
    sig.s_a = transmit(sig.s_a, ChannelModel::bit_flip(rng.below(kParams.l)), rng);
    auto check = appendix::check_signature(sig.s_a, s.message, s.parties.signer_key(), ids.signer,
                                           ctx, rng);
    EXPECT_FALSE(check.valid) << seed;
  }
}

TEST(AppendixRun, MessageTamperedBeforeArbitratorFailsSignerCheck) {
  int caught = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    RunOptions options;
    const std::size_t pos = seed % kParams.n;
    options.adversary.on_classical = [pos](std::string_view hop, std::string_view label,
                                           BitString& b) {
      if (hop == kHopBobArbitrator && label == "P") b.flip(pos);
    };
    auto r = run_once(seed, options);
    caught += mu_a_of(r.transcript) == "0";
    ASSERT_TRUE(r.verdict);
    EXPECT_NE(r.verdict->kind, VerdictKind::Accept);
  }
  EXPECT_EQ(caught, 1000);
}

TEST(AppendixRun, HonestRunAcceptsInBothTransports) {
  for (auto transport : {Transport::ClassicalP, Transport::QuantumP}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Fixture s(seed, kParams.n2, kParams.n);
      ProtocolContext ctx(kParams);
      RunOptions options;
      options.transport = transport;
      auto r = appendix::run(s.message, s.parties, options, ctx, s.run_seed);
      ASSERT_TRUE(r.verdict);
      EXPECT_EQ(r.verdict->kind, VerdictKind::Accept);
      EXPECT_EQ(r.verdict->message, s.message);
    }
  }
}

TEST(AppendixRun, InvalidSignatureReportedToReceiver) {
  ProtocolContext ctx(kParams);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Fixture s(seed, kParams.n2, kParams.n);
    RandomSource attacker(derive_seed(seed, 77));
    KeyRecord guess{s.parties.ids().signer, random_bits(kParams.n2, attacker)};
    auto forged = appendix::sign(s.message, guess, guess.party_id, ctx, attacker);
    RunOptions options;
    options.adversary.on_qubits = [&](std::string_view hop, std::string_view label,
                                      QubitString& q) {
      if (hop == kHopAliceBob && label == "s_a") q = forged.s_a;
    };
    auto r = appendix::run(s.message, s.parties, options, ctx, s.run_seed);
    ASSERT_TRUE(r.verdict);
    EXPECT_EQ(r.verdict->kind, VerdictKind::AbortReceiverInvalid);
    EXPECT_EQ(s.parties.signer_key().abort_count, 1u);
  }
}

TEST(AppendixRun, CorruptedReplyRejected) {
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t pos = seed % kParams.n2;
    RunOptions options;
    options.adversary.on_qubits = [pos](std::string_view hop, std::string_view label,
                                        QubitString& q) {
      if (hop == kHopArbitratorBob && label == "y_a") q[pos] = orthogonal(q[pos]);
    };
    auto r = run_once(seed, options);
    rejected += r.verdict && r.verdict->kind == VerdictKind::RejectByReceiver;
  }
  EXPECT_GE(rejected, 999);
}

TEST(AppendixRun, BitFlipsOnSignatureNeverAccept) {
  for (std::size_t pos = 0; pos < kParams.n2; ++pos) {
    RunOptions options;
    options.channels.alice_bob = ChannelModel::bit_flip(pos);
    auto r = run_once(pos, options);
    ASSERT_TRUE(r.verdict);
    EXPECT_NE(r.verdict->kind, VerdictKind::Accept) << pos;
  }
}

TEST(AppendixRun, ClassicalTransportCountsMessageBits) {
  auto [q, b] = sent(run_once(4).transcript);
  EXPECT_EQ(q, 5 * kParams.n2);
  EXPECT_EQ(b, 3 * kParams.n);
}

TEST(AppendixRun, QuantumTransportCountsMessageQubits) {
  RunOptions options;
  options.transport = Transport::QuantumP;
  auto r = run_once(4, options);
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->kind, VerdictKind::Accept);
  auto [q, b] = sent(r.transcript);
  EXPECT_EQ(q, 5 * kParams.n2 + 3 * kParams.n);
  EXPECT_EQ(b, 0u);
}

TEST(AppendixRun, Deterministic) {
  RunOptions options;
  options.transport = Transport::QuantumP;
  EXPECT_EQ(run_once(9, options).transcript.to_jsonl(true),
            run_once(9, options).transcript.to_jsonl(true));
  EXPECT_EQ(run_once(9).transcript.to_jsonl(), run_once(9).transcript.to_jsonl());
}

TEST(AppendixRun, EmptyMessageFails) {
  auto r = run_once(1, {}, 0);
  EXPECT_FALSE(r.verdict);
  EXPECT_TRUE(r.failure);
}
