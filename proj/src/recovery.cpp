#include "aqs/recovery.hpp"

#include "aqs/error.hpp"
#include "hop.hpp"

namespace aqs::recovery {

namespace {

void expect_length(const QubitString& q, std::size_t n, const char* what) {
  if (q.size() != n) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + " has " + std::to_string(q.size()) +
                                               " qubits, expected " + std::to_string(n));
  }
}

struct Opened {
  BitString nonce;
  BitString measured;  // r' || R'
  BitString message;
  BitString tag;
  BitString identity;
};

// Measures a (r || R) string under `key` and strips the h1 mask, splitting
// the payload into message || tag || identity.
Opened open_masked(QubitString qubits, const BitString& key, std::size_t message_bits,
                   std::size_t tag_bits, const ProtocolContext& ctx, RandomSource& rng) {
  const auto& p = ctx.params;
  Opened o;
  o.measured = decode_conjugate(key, qubits, rng);
  auto halves = split(o.measured, {p.l, p.m1});
  o.nonce = halves[0];
  auto payload = xor_bits(ctx.hash.h1({key, halves[0]}), halves[1]);
  auto parts = split(payload, {message_bits, tag_bits, p.k});
  o.message = std::move(parts[0]);
  o.tag = std::move(parts[1]);
  o.identity = std::move(parts[2]);
  return o;
}

const BitString kMuOne{1};
const BitString kMuZero{0};

}  // namespace

Signature sign(const BitString& message, KeyRecord& key_a, const IdentityString& signer,
               const ProtocolContext& ctx, RandomSource& rng) {
  const auto& p = ctx.params;
  if (message.size() != p.n) {
    throw Error(ErrorCode::LengthMismatch, "message must have n = " + std::to_string(p.n) + " bits");
  }
  key_a.use();
  if (key_a.key.size() != p.n1) throw Error(ErrorCode::LengthMismatch, "signer key must have n1 bits");
  auto r_a = random_bits(p.l, rng);
  auto payload = concat({message, ctx.hash.h2({message, r_a}), signer.bits()});
  auto masked = xor_bits(ctx.hash.h1({key_a.key, r_a}), payload);
  return {encode_conjugate(key_a.key, concat({r_a, masked})), std::move(r_a)};
}

ReceiverChallenge receiver_challenge(KeyRecord& key_b, const IdentityString& receiver,
                                     const ProtocolContext& ctx, RandomSource& rng) {
  const auto& p = ctx.params;
  key_b.use();
  if (key_b.key.size() != p.n1) throw Error(ErrorCode::LengthMismatch, "receiver key must have n1 bits");
  auto r_b = random_bits(p.l, rng);
  auto filler = random_bits(p.n + p.m2, rng);
  auto masked = xor_bits(ctx.hash.h1({key_b.key, r_b}), concat({filler, receiver.bits()}));
  return {encode_conjugate(key_b.key, concat({r_b, masked})), std::move(filler), std::move(r_b)};
}

Arbitration arbitrate(QubitString s_a, QubitString y_b, KeyRecord& key_a, KeyRecord& key_b,
                      const Identities& ids, const ProtocolContext& ctx, RandomSource& rng) {
  const auto& p = ctx.params;
  expect_length(s_a, p.n1, "signature");
  expect_length(y_b, p.n1, "receiver string");
  key_a.require_usable();
  key_b.require_usable();

  auto sig = open_masked(std::move(s_a), key_a.key, p.n, p.m2, ctx, rng);
  const Bit mu_a =
      sig.tag == ctx.hash.h2({sig.message, sig.nonce}) && sig.identity == ids.signer.bits();

  auto challenge = open_masked(std::move(y_b), key_b.key, p.n + p.m2, 0, ctx, rng);
  const Bit mu_b = challenge.identity == ids.receiver.bits();

  if (!mu_b) {
    key_b.record_abort();
    return ArbitratorReject{mu_a};
  }
  if (!mu_a) key_a.record_abort();

  auto r_a = random_bits(p.l, rng);
  const auto& mu = mu_a ? kMuOne : kMuZero;
  auto payload = concat({sig.message, ctx.hash.h2({sig.message, r_a, mu, challenge.message}),
                         ids.arbitrator.bits()});
  auto masked = xor_bits(ctx.hash.h1({key_b.key, r_a}), payload);

  ArbitratorResponse response;
  response.s_a_replay = encode_conjugate(key_a.key, sig.measured);
  response.y_a = encode_conjugate(key_b.key, concat({r_a, masked}));
  response.mu_a = mu_a;
  response.mu_b = mu_b;
  return response;
}

Verdict receiver_verify(ArbitratorResponse& response, KeyRecord& key_b,
                        const IdentityString& arbitrator, const ReceiverChallenge& challenge,
                        const ProtocolContext& ctx, RandomSource& rng) {
  const auto& p = ctx.params;
  expect_length(response.y_a, p.n1, "arbitrator string");
  auto o = open_masked(std::move(response.y_a), key_b.key, p.n, p.m2, ctx, rng);
  response.y_a.clear();
  if (o.identity == arbitrator.bits()) {
    if (o.tag == ctx.hash.h2({o.message, o.nonce, kMuOne, challenge.filler})) {
      return {VerdictKind::Accept, std::move(o.message)};
    }
    if (o.tag == ctx.hash.h2({o.message, o.nonce, kMuZero, challenge.filler})) {
      return {VerdictKind::AbortReceiverInvalid, std::move(o.message)};
    }
  }
  key_b.record_abort();
  return {VerdictKind::RejectByReceiver, {}};
}

std::optional<BitString> open_signature(QubitString s_a, const KeyRecord& key_a,
                                        const IdentityString& signer, const ProtocolContext& ctx,
                                        RandomSource& rng) {
  const auto& p = ctx.params;
  expect_length(s_a, p.n1, "signature");
  auto o = open_masked(std::move(s_a), key_a.key, p.n, p.m2, ctx, rng);
  if (o.tag == ctx.hash.h2({o.message, o.nonce}) && o.identity == signer.bits()) {
    return o.message;
  }
  return std::nullopt;
}

RunResult run(const BitString& message, Parties& parties, const RunOptions& options,
              const ProtocolContext& ctx, std::uint64_t seed) {
  RunResult result;
  auto& t = result.transcript;
  t = Transcript("recovery", seed);
  t.set_signed_bits(message.size());
  const auto& ids = parties.ids();
  t.set_party("signer", ids.signer.bits());
  t.set_party("receiver", ids.receiver.bits());
  t.set_party("arbitrator", ids.arbitrator.bits());
  RandomSource rng(seed);

  try {
    auto signature = sign(message, parties.signer_key(), ids.signer, ctx, rng);
    QubitString s_a = std::move(signature.s_a);
    detail::send_qubits(t, "alice", kHopAliceBob, {{"s_a", &s_a}}, options.channels.alice_bob,
                        options.adversary, rng);

    auto challenge = receiver_challenge(parties.receiver_key(), ids.receiver, ctx, rng);
    QubitString y_b = challenge.y_b;
    detail::send_qubits(t, "bob", kHopBobArbitrator, {{"s_a", &s_a}, {"y_b", &y_b}},
                        options.channels.bob_arbitrator, options.adversary, rng);

    auto outcome = arbitrate(std::move(s_a), std::move(y_b), parties.signer_key(),
                             parties.receiver_key(), ids, ctx, rng);

    if (auto* reject = std::get_if<ArbitratorReject>(&outcome)) {
      t.note(EventKind::Measurement, "arbitrator", "check",
             {{"mu_a", std::to_string(reject->mu_a)}, {"mu_b", "0"}});
      t.note(EventKind::Notification, "arbitrator", "reject", {{"to", "bob"}});
      t.note(EventKind::Notification, "arbitrator", "confirm-reject", {{"to", "alice"}});
      result.verdict = Verdict{VerdictKind::RejectByArbitrator, {}};
      t.note(EventKind::Verdict, "arbitrator", std::string(to_string(result.verdict->kind)));
      return result;
    }

    auto& response = std::get<ArbitratorResponse>(outcome);
    t.note(EventKind::Measurement, "arbitrator", "check",
           {{"mu_a", std::to_string(response.mu_a)}, {"mu_b", std::to_string(response.mu_b)}});
    detail::send_qubits(t, "arbitrator", kHopArbitratorBob,
                        {{"s_a_replay", &response.s_a_replay}, {"y_a", &response.y_a}},
                        options.channels.arbitrator_bob, options.adversary, rng);

    // Bob keeps the replayed signature unmeasured as dispute evidence.
    t.note(EventKind::Notification, "bob", "evidence").payload_qubits = response.s_a_replay;

    auto verdict = receiver_verify(response, parties.receiver_key(), ids.arbitrator, challenge,
                                   ctx, rng);
    auto& e = t.note(EventKind::Verdict, "bob", std::string(to_string(verdict.kind)));
    if (!verdict.message.empty()) e.payload_bits = verdict.message;
    result.verdict = std::move(verdict);
  } catch (const Error& err) {
    t.note(EventKind::Failure, "driver", "error", detail::error_fields(err));
    result.failure = err.what();
  }
  return result;
}

}  // namespace aqs::recovery
