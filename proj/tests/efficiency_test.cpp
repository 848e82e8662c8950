#include <gtest/gtest.h>

#include "aqs/appendix.hpp"
#include "aqs/efficiency.hpp"
#include "aqs/error.hpp"
#include "aqs/recovery.hpp"
#include "test_support.hpp"

using namespace aqs;
using aqs::testing::Fixture;

TEST(Rational, Normalizes) {
  EXPECT_EQ(Rational(32, 320), Rational(1, 10));
  EXPECT_EQ(Rational(3, -25).to_string(), "-3/25");
  EXPECT_EQ(Rational::parse("4/3"), Rational(4, 3));
  EXPECT_EQ(Rational::parse("2"), Rational(2));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_TRUE(Rational(1, 10) < Rational(3, 25));
}

TEST(Rational, Percent) {
  EXPECT_EQ(Rational(1, 10).percent(), "10%");
  EXPECT_EQ(Rational(3, 25).percent(), "12%");
  EXPECT_EQ(Rational(1, 8).percent(), "12.5%");
  EXPECT_EQ(Rational(1).percent(), "100%");
}

TEST(Eta, Formula) {
  EXPECT_EQ(eta({32, 320, 0}), Rational(1, 10));
  EXPECT_EQ(eta({64, 64, 0}), Rational(1));
  EXPECT_EQ(eta({32, 240, 96}), Rational(2, 21));
  try {
    eta({32, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(Tally, RejectsEmptyOrUnfinished) {
  try {
    tally(Transcript());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedTranscript);
  }
  Transcript t("recovery", 0);
  t.qubit_send("alice", "alice-bob", "s_a", QubitString(10, Qubit(Basis::Rectilinear, 0)));
  EXPECT_THROW(tally(t), Error);
}

TEST(Tally, RecoveryRunSendsFiveKeyLengths) {
  const auto p = ProtocolParams::defaults();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Fixture s(seed, p.n1, p.n);
    ProtocolContext ctx(p);
    auto r = recovery::run(s.message, s.parties, {}, ctx, s.run_seed);
    EXPECT_EQ(tally(r.transcript), (TransmissionTally{p.n, 5 * p.n1, 0}));
  }
}

TEST(Tally, AppendixClassicalCountsMessageThreeTimes) {
  const auto p = ProtocolParams::defaults();
  Fixture s(1, p.n2, 100);
  ProtocolContext ctx(p);
  auto r = appendix::run(s.message, s.parties, {}, ctx, s.run_seed);
  EXPECT_EQ(tally(r.transcript), (TransmissionTally{100, 5 * p.n2, 300}));
}

TEST(Ratios, ParameterSets) {
  auto half = params_for_ratios(Rational(1, 2), Rational(3, 2));
  EXPECT_EQ(half.n, 32u);
  EXPECT_EQ(half.l, 16u);
  EXPECT_EQ(half.m1, 48u);
  EXPECT_EQ(half.n1, 2 * half.n);
  auto third = params_for_ratios(Rational(1, 3), Rational(4, 3));
  EXPECT_EQ(third.l * 3, third.n);
  EXPECT_EQ(third.m1 * 3, 4 * third.n);
  EXPECT_EQ(third.n1 * 3, 5 * third.n);
  EXPECT_NO_THROW(third.validate());
  EXPECT_THROW(params_for_ratios(Rational(1, 2), Rational(1, 2)), Error);
}

TEST(Efficiency, MeasuredFromLiveTranscripts) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto half = measure_recovery_efficiency(Rational(1, 2), Rational(3, 2), seed);
    EXPECT_EQ(half.efficiency, Rational(1, 10));
    EXPECT_EQ(half.efficiency.percent(), "10%");
    EXPECT_EQ(half.counts.qubits, 10 * half.params.n);
    auto third = measure_recovery_efficiency(Rational(1, 3), Rational(4, 3), seed);
    EXPECT_EQ(third.efficiency, Rational(3, 25));
    EXPECT_EQ(third.efficiency.percent(), "12%");
  }
}

TEST(Efficiency, ComparisonTable) {
  auto table = comparison_table();
  ASSERT_EQ(table.size(), 7u);
  const Rational expected[] = {{9, 100}, {12, 100}, {11, 100}, {11, 100}, {11, 100}};
  for (int i = 0; i < 5; ++i) {
    EXPECT_TRUE(table[i].published);
    EXPECT_EQ(table[i].efficiency, expected[i]) << table[i].scheme;
  }
  EXPECT_NE(table[0].scheme.find("GHZ"), std::string::npos);
  EXPECT_NE(table[1].scheme.find("with public board"), std::string::npos);
  EXPECT_FALSE(table[5].published);
  EXPECT_EQ(table[5].efficiency,
            measure_recovery_efficiency(Rational(1, 2), Rational(3, 2), 0).efficiency);
  EXPECT_EQ(table[6].efficiency, Rational(3, 25));
}
