#include <gtest/gtest.h>

#include <cstdio>
#include <set>

#include "aqs/appendix.hpp"
#include "aqs/error.hpp"
#include "aqs/payment.hpp"
#include "aqs/random.hpp"
#include "test_support.hpp"

using namespace aqs;
using namespace aqs::payment;
using aqs::testing::orthogonal;

namespace {

const ProtocolParams kParams = ProtocolParams::defaults();

struct World {
  ProtocolContext ctx{kParams};
  RandomSource rng;
  Bank bank;
  RegistrationRecord payer;
  RegistrationRecord payee;
  Ledger ledger;

  explicit World(std::uint64_t seed)
      : rng(seed),
        payer(bank.register_party(IdentityString::from_name("payer", kParams.k), BankRole::Issuer,
                                  kParams, rng)),
        payee(bank.register_party(IdentityString::from_name("payee", kParams.k),
                                  BankRole::Acquirer, kParams, rng)) {
    ledger.open_account(payer.account(), 100);
    ledger.open_account(payee.account(), 0);
  }

  CheckPart1 check(std::uint32_t amount = 50) const {
    return {text_field("payee"), text_field("payer"), payer.account(), amount,
            text_field("goods"), 0, 30};
  }

  CheckPart2 endorsement(std::uint32_t amount = 50) const {
    return {text_field("payee"), payee.account(), amount};
  }

  EndorsedCheck package(std::uint32_t p4 = 50, std::uint32_t p10 = 50) {
    auto signed_check = pay(check(p4), payer, ctx, rng);
    return capture(std::move(signed_check), payee, endorsement(p10), ctx, rng);
  }
};

}  // namespace

TEST(Check, LayoutAndRoundTrip) {
  CheckPart1 p1{1, 2, 3, 4, 5, 6, 7};
  auto bits = p1.serialize();
  EXPECT_EQ(bits.size(), kCheckPart1Bits);
  EXPECT_EQ(split(bits, {32, 32, 32, 32, 32, 32, 32})[3].to_uint(), 4u);
  EXPECT_EQ(CheckPart1::parse(bits), p1);
  CheckPart2 p2{8, 9, 10};
  EXPECT_EQ(p2.serialize().size(), kCheckPart2Bits);
  EXPECT_EQ(CheckPart2::parse(p2.serialize()), p2);
  EXPECT_THROW(CheckPart1::parse(BitString::zeros(10)), Error);
  CheckPart1 late{1, 2, 3, 4, 5, 9, 8};
  try {
    late.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedCheck);
  }
}

TEST(OneTimePad, RoundTripAndKeyDependence) {
  RandomSource rng(1);
  for (int i = 0; i < 100; ++i) {
    auto plain = random_bits(48, rng);
    auto key = random_bits(96, rng);
    auto q = otp_encrypt(key, plain);
    EXPECT_EQ(otp_decrypt(key, q, rng), plain);
  }
  auto plain = random_bits(4000, rng);
  auto key = random_bits(8000, rng);
  auto q = otp_encrypt(key, plain);
  auto wrong = random_bits(8000, rng);
  const double err =
      static_cast<double>(hamming_distance(otp_decrypt(wrong, q, rng), plain)) / 4000.0;
  EXPECT_NEAR(err, 0.5, 0.05);
  EXPECT_THROW(otp_encrypt(BitString::zeros(3), plain), Error);
}

TEST(Registration, PartyLearnsWhatTheBankStores) {
  World w(2);
  for (const auto* r : {&w.payer, &w.payee}) {
    EXPECT_EQ(r->key.key.size(), kParams.n2);
    EXPECT_EQ(r->account_info.size(), 32u);
    const auto* stored = w.bank.stored_record(r->party_id);
    ASSERT_NE(stored, nullptr);
    EXPECT_EQ(*stored, concat({r->party_id.bits(), r->account_info}));
    EXPECT_EQ(w.bank.key(r->party_id).key, r->key.key);
    EXPECT_EQ(*w.bank.owner(r->account()), r->party_id);
  }
}

TEST(Registration, DistinctKeysAndAccounts) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    World w(seed);
    EXPECT_NE(w.payer.key.key, w.payee.key.key);
    EXPECT_NE(w.payer.account(), w.payee.account());
  }
}

TEST(Registration, OnlyOnce) {
  World w(3);
  try {
    w.bank.register_party(w.payer.party_id, BankRole::Issuer, kParams, w.rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AlreadyRegistered);
  }
}

TEST(Registration, EavesdroppedDeliveryCorruptsAccountInfo) {
  int corrupted = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomSource rng(seed);
    Bank bank;
    auto id = IdentityString::from_name("payer", kParams.k);
    auto r = bank.register_party(id, BankRole::Issuer, kParams, rng,
                                 ChannelModel::intercept_resend());
    corrupted += concat({id.bits(), r.account_info}) != *bank.stored_record(id);
  }
  EXPECT_GE(corrupted, 190);
}

TEST(Pay, SignatureShapes) {
  World w(4);
  auto pkg = w.package();
  EXPECT_EQ(pkg.s1.size(), kParams.n2);
  EXPECT_EQ(pkg.s2.size(), kParams.n2);

  ProtocolContext zero(kParams);
  zero.hash.force_zero(HashFn::H3);
  auto signed_check = pay(w.check(), w.payer, zero, w.rng);
  auto halves = split(decode_conjugate(w.payer.key.key, signed_check.s1, w.rng),
                      {kParams.l, kParams.m3});
  EXPECT_EQ(halves[1], concat({halves[0], w.payer.party_id.bits()}));
}

TEST(Settle, HonestCheckMovesMoney) {
  World w(5);
  Transcript t("payment", 5);
  auto result = settle(w.package(), w.bank, w.ledger, w.ctx, w.rng, {false, 0, &t});
  EXPECT_EQ(result.status, SettlementStatus::Committed);
  EXPECT_EQ(result.amount, 50u);
  EXPECT_EQ(w.ledger.balance(w.payer.account()), 50u);
  EXPECT_EQ(w.ledger.balance(w.payee.account()), 50u);
  EXPECT_EQ(w.ledger.total(), 100u);
  ASSERT_EQ(w.ledger.history().size(), 1u);
  ASSERT_GE(t.events().size(), 2u);
  EXPECT_EQ(t.events()[t.events().size() - 2].kind, EventKind::LedgerCommit);
  EXPECT_EQ(t.events().back().label, "Committed");
}

TEST(Settle, AmountMismatchRejected) {
  World w(6);
  const auto before = w.ledger;
  auto result = settle(w.package(50, 60), w.bank, w.ledger, w.ctx, w.rng);
  EXPECT_EQ(result.status, SettlementStatus::RejectedMismatch);
  EXPECT_EQ(w.ledger, before);
}

TEST(Settle, PayeeNameMismatchRejected) {
  World w(7);
  auto signed_check = pay(w.check(), w.payer, w.ctx, w.rng);
  CheckPart2 other{text_field("mallory"), w.payee.account(), 50};
  auto pkg = capture(std::move(signed_check), w.payee, other, w.ctx, w.rng);
  EXPECT_EQ(settle(pkg, w.bank, w.ledger, w.ctx, w.rng).status,
            SettlementStatus::RejectedMismatch);
}

TEST(Settle, EveryFlippedCheckBitRejected) {
  World w(8);
  for (std::size_t pos = 0; pos < kCheckPart1Bits; ++pos) {
    auto pkg = w.package();
    auto bits = pkg.p1.serialize();
    bits.flip(pos);
    pkg.p1 = CheckPart1::parse(bits);
    const auto before = w.ledger;
    EXPECT_EQ(settle(pkg, w.bank, w.ledger, w.ctx, w.rng).status,
              SettlementStatus::RejectedSignaturePayer)
        << pos;
    EXPECT_EQ(w.ledger, before);
  }
}

TEST(Settle, OrthogonalSubstitutionInPayerSignatureRejected) {
  World w(9);
  int rejected = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    auto pkg = w.package(1, 1);
    const auto pos = i % kParams.n2;
    pkg.s1[pos] = orthogonal(pkg.s1[pos]);
    rejected += settle(pkg, w.bank, w.ledger, w.ctx, w.rng).status ==
                SettlementStatus::RejectedSignaturePayer;
  }
  EXPECT_GE(rejected, 999);
}

TEST(Settle, TamperedEndorsementRejected) {
  World w(10);
  auto pkg = w.package();
  pkg.s2[3] = orthogonal(pkg.s2[3]);
  EXPECT_EQ(settle(pkg, w.bank, w.ledger, w.ctx, w.rng).status,
            SettlementStatus::RejectedSignaturePayee);
}

TEST(Settle, UnknownAccountCountsAsBadSignature) {
  World w(11);
  auto pkg = w.package();
  pkg.p1.payer_account ^= 1;
  EXPECT_EQ(settle(pkg, w.bank, w.ledger, w.ctx, w.rng).status,
            SettlementStatus::RejectedSignaturePayer);
}

TEST(Settle, StrictExpiry) {
  World w(12);
  EXPECT_EQ(settle(w.package(), w.bank, w.ledger, w.ctx, w.rng, {true, 31, nullptr}).status,
            SettlementStatus::RejectedExpired);
  EXPECT_EQ(settle(w.package(), w.bank, w.ledger, w.ctx, w.rng, {true, 30, nullptr}).status,
            SettlementStatus::Committed);
  EXPECT_EQ(settle(w.package(), w.bank, w.ledger, w.ctx, w.rng, {false, 99, nullptr}).status,
            SettlementStatus::Committed);
}

TEST(Ledger, TransferIsAtomic) {
  Ledger l;
  l.open_account(1, 10);
  l.open_account(2, 0);
  const auto before = l;
  auto code = [&](std::uint32_t a, std::uint32_t b, std::uint64_t amt) {
    try {
      l.transfer(a, b, amt);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code(1, 2, 11), ErrorCode::InsufficientFunds);
  EXPECT_EQ(code(1, 3, 1), ErrorCode::UnknownAccount);
  EXPECT_EQ(code(3, 1, 1), ErrorCode::UnknownAccount);
  EXPECT_EQ(l, before);
  l.transfer(1, 2, 10);
  EXPECT_EQ(l.total(), 10u);
}

TEST(Ledger, TextRoundTripAndFiles) {
  Ledger l;
  l.open_account(7, 100);
  l.open_account(9, 5);
  l.transfer(7, 9, 30);
  EXPECT_EQ(Ledger::from_text(l.to_text()), l);
  const std::string path = ::testing::TempDir() + "aqs_ledger_test.txt";
  l.save(path);
  EXPECT_EQ(Ledger::load(path), l);
  std::remove(path.c_str());
  EXPECT_THROW(Ledger::load(path), Error);
  EXPECT_THROW(Ledger::from_text("account x\n"), Error);
}

TEST(Scenario, CleanRunCommits) {
  auto out = run_payment_scenario({}, 1);
  ASSERT_TRUE(out.result);
  EXPECT_EQ(out.result->status, SettlementStatus::Committed);
  EXPECT_EQ(out.ledger.total(), 100u);
  EXPECT_EQ(run_payment_scenario({}, 1).transcript.to_jsonl(true), out.transcript.to_jsonl(true));
}

TEST(Scenario, QuantumCheckTransportCommits) {
  PaymentScenario s;
  s.transport = Transport::QuantumP;
  auto out = run_payment_scenario(s, 2);
  ASSERT_TRUE(out.result);
  EXPECT_EQ(out.result->status, SettlementStatus::Committed);
}

TEST(Scenario, EavesdropperOnBankHopIsCaught) {
  PaymentScenario s;
  s.payee_bank = ChannelModel::intercept_resend();
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto out = run_payment_scenario(s, seed);
    ASSERT_TRUE(out.result);
    rejected += out.result->status == SettlementStatus::RejectedSignaturePayer ||
                out.result->status == SettlementStatus::RejectedSignaturePayee;
  }
  EXPECT_GE(rejected, 475);
}

TEST(Scenario, ReplayedPackageSettlesTwice) {
  PaymentScenario s;
  s.replay = true;
  auto out = run_payment_scenario(s, 3);
  ASSERT_TRUE(out.result && out.replay_result);
  EXPECT_EQ(out.result->status, SettlementStatus::Committed);
  EXPECT_EQ(out.replay_result->status, SettlementStatus::Committed);
  EXPECT_EQ(out.ledger.history().size(), 2u);
  bool flagged = false;
  for (const auto& e : out.transcript.events()) flagged |= e.label == "double-settlement";
  EXPECT_TRUE(flagged);
}

TEST(Scenario, OverdraftFailsWithoutMovingMoney) {
  PaymentScenario s;
  s.amount = s.payee_amount = 500;
  auto out = run_payment_scenario(s, 4);
  EXPECT_FALSE(out.result);
  ASSERT_TRUE(out.failure);
  EXPECT_EQ(out.ledger.total(), 100u);
  EXPECT_TRUE(out.ledger.history().empty());
}

TEST(Scenario, LedgerFilePersistsAcrossRuns) {
  const std::string path = ::testing::TempDir() + "aqs_scenario_ledger.txt";
  std::remove(path.c_str());
  PaymentScenario s;
  s.ledger_path = path;
  auto first = run_payment_scenario(s, 5);
  auto second = run_payment_scenario(s, 5);
  ASSERT_TRUE(second.result);
  EXPECT_EQ(second.result->status, SettlementStatus::Committed);
  EXPECT_EQ(second.ledger.history().size(), 2u);
  EXPECT_EQ(second.ledger.total(), 100u);
  EXPECT_EQ(Ledger::load(path), second.ledger);
  std::remove(path.c_str());
}
