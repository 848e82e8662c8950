#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "aqs/aqs.h"

namespace {

struct Run {
  aqs_status status = AQS_OK;
  int exit_code = -1;
  std::string outcome, transcript, summary;
};

Run run(std::initializer_list<std::pair<const char*, const char*>> settings, const char* command) {
  aqs_config* cfg = nullptr;
  EXPECT_EQ(aqs_config_create(&cfg), AQS_OK);
  for (const auto& [k, v] : settings) EXPECT_EQ(aqs_config_set(cfg, k, v), AQS_OK);
  aqs_result* res = nullptr;
  Run r;
  r.status = aqs_run(cfg, command, &res);
  if (res) {
    r.exit_code = aqs_result_exit_code(res);
    r.outcome = aqs_result_outcome(res);
    r.transcript = aqs_result_transcript(res);
    r.summary = aqs_result_summary(res);
  }
  aqs_result_destroy(res);
  aqs_config_destroy(cfg);
  return r;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(aqs_version(), "1.0.0");
  EXPECT_STREQ(aqs_status_name(AQS_OK), "ok");
  EXPECT_STREQ(aqs_status_name(AQS_E_INVALID_CONFIG), "InvalidConfig");
  EXPECT_STREQ(aqs_status_name(AQS_E_INSUFFICIENT_FUNDS), "InsufficientFunds");
  EXPECT_STREQ(aqs_status_name(AQS_E_NULL_ARGUMENT), "NullArgument");
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(aqs_config_create(nullptr), AQS_E_NULL_ARGUMENT);
  EXPECT_NE(std::string(aqs_last_error()), "");
  EXPECT_EQ(aqs_config_set(nullptr, "seed", "1"), AQS_E_NULL_ARGUMENT);
  EXPECT_EQ(aqs_result_exit_code(nullptr), 3);
  EXPECT_STREQ(aqs_result_transcript(nullptr), "");
  aqs_config_destroy(nullptr);
  aqs_result_destroy(nullptr);
}

TEST(CApi, HonestSignaturesAccept) {
  for (const char* cmd : {"sign-recovery", "sign-appendix"}) {
    auto r = run({{"seed", "7"}}, cmd);
    ASSERT_EQ(r.status, AQS_OK) << aqs_last_error();
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.outcome, "Accept");
    EXPECT_EQ(r.transcript.rfind("{\"schema\":\"aqs-transcript\"", 0), 0u);
  }
}

TEST(CApi, ExitCodesFollowVerdicts) {
  EXPECT_EQ(run({{"channel.arbitrator-bob", "bitflip:100"}}, "sign-recovery").exit_code, 11);
  EXPECT_EQ(run({{"channel.alice-bob", "bitflip:20"}}, "sign-recovery").exit_code, 12);
  EXPECT_EQ(run({{"payee-amount", "60"}}, "payment").exit_code, 22);
  EXPECT_EQ(run({{"channel.payer-payee", "bitflip:0"}}, "payment").exit_code, 20);
  EXPECT_EQ(run({{"strict-expiry", "true"}, {"today", "31"}}, "payment").exit_code, 23);
  EXPECT_EQ(run({}, "payment").exit_code, 0);
  EXPECT_EQ(run({{"forge", "true"}}, "dispute").exit_code, 13);
  EXPECT_EQ(run({}, "dispute").exit_code, 0);
}

TEST(CApi, ReceiverRejectedByArbitrator) {
  // A flipped nonce bit in y_b breaks the receiver identity check.
  auto r = run({{"channel.bob-arbitrator", "bitflip:85"}}, "sign-recovery");
  EXPECT_EQ(r.exit_code, 10);
  EXPECT_EQ(r.outcome, "RejectByArbitrator");
}

TEST(CApi, ConfigErrors) {
  auto r = run({{"m1", "70"}, {"m2", "16"}}, "sign-recovery");
  EXPECT_EQ(r.status, AQS_E_INVALID_CONFIG);
  EXPECT_NE(std::string(aqs_last_error()).find("m1 must equal n + m2 + k"), std::string::npos);
  EXPECT_EQ(run({{"channel.payer-payee", "identity"}}, "sign-recovery").status,
            AQS_E_INVALID_CONFIG);
  EXPECT_EQ(run({}, "teleport").status, AQS_E_INVALID_CONFIG);
  EXPECT_EQ(run({{"trials", "0"}}, "attack").status, AQS_E_INVALID_SCENARIO);

  aqs_config* cfg = nullptr;
  ASSERT_EQ(aqs_config_create(&cfg), AQS_OK);
  EXPECT_EQ(aqs_config_validate(cfg), AQS_OK);
  aqs_config_set(cfg, "bogus", "1");
  EXPECT_EQ(aqs_config_validate(cfg), AQS_E_INVALID_CONFIG);
  EXPECT_EQ(aqs_config_load_file(cfg, "/nonexistent/aqs.conf"), AQS_E_INVALID_CONFIG);
  aqs_config_destroy(cfg);
}

TEST(CApi, FileValuesYieldToSetValues) {
  const std::string path = ::testing::TempDir() + "aqs_capi_test.conf";
  {
    std::ofstream(path) << "seed = 3\nscheme = appendix\n";
  }
  aqs_config* cfg = nullptr;
  ASSERT_EQ(aqs_config_create(&cfg), AQS_OK);
  ASSERT_EQ(aqs_config_set(cfg, "seed", "4"), AQS_OK);
  ASSERT_EQ(aqs_config_load_file(cfg, path.c_str()), AQS_OK);
  aqs_result* res = nullptr;
  ASSERT_EQ(aqs_run(cfg, "dispute", &res), AQS_OK);
  const std::string t = aqs_result_transcript(res);
  EXPECT_NE(t.find("\"scheme\":\"appendix\""), std::string::npos);
  EXPECT_NE(t.find("\"seed\":4"), std::string::npos);
  aqs_result_destroy(res);
  aqs_config_destroy(cfg);
  std::remove(path.c_str());
}

TEST(CApi, EfficiencyReportsTenPercent) {
  auto r = run({{"l-ratio", "1/2"}, {"m1-ratio", "3/2"}}, "efficiency");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.summary.find("10%"), std::string::npos);
  auto j = run({{"json", "true"}}, "efficiency");
  EXPECT_NE(j.summary.find("\"eta\":\"1/10\""), std::string::npos);
}

TEST(CApi, InterceptResendErrorRateLine) {
  auto r = run({{"strategy", "intercept-resend"}, {"qubits", "100000"}, {"trials", "50"}},
               "attack");
  ASSERT_EQ(r.status, AQS_OK);
  const auto at = r.summary.find("per-qubit error rate: ");
  ASSERT_NE(at, std::string::npos);
  const double rate = std::stod(r.summary.substr(at + 22));
  EXPECT_GE(rate, 0.24);
  EXPECT_LE(rate, 0.26);
}

TEST(CApi, DebugTranscriptsCarryQubits) {
  EXPECT_EQ(run({}, "sign-recovery").transcript.find("payload_qubits"), std::string::npos);
  EXPECT_NE(run({{"debug", "1"}}, "sign-recovery").transcript.find("payload_qubits"),
            std::string::npos);
}
