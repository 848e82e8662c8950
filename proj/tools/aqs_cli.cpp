#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "aqs/aqs.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

int exit_for(aqs_status status) {
  switch (status) {
    case AQS_E_INVALID_CONFIG:
    case AQS_E_INVALID_PARAMS:
    case AQS_E_INVALID_SCENARIO:
    case AQS_E_NULL_ARGUMENT:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

int report(aqs_status status) {
  std::cerr << "aqs: " << aqs_status_name(status) << ": " << aqs_last_error() << '\n';
  return exit_for(status);
}


}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arbitrated quantum signature simulator"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(aqs_version()));

  std::string params_file;
  std::string out_path;
  std::vector<std::string> channels;
  std::vector<std::pair<std::string, std::string>> values;

  auto text = [&](const std::string& name, const std::string& key, const std::string& help) {
    app.add_option_function<std::string>(
        name, [&values, key](const std::string& v) { values.emplace_back(key, v); }, help);
  };
  auto flag = [&](const std::string& name, const std::string& key, const std::string& help) {
    app.add_flag_callback(name, [&values, key] { values.emplace_back(key, "true"); }, help);
  };

  app.add_option("--params", params_file, "key = value config file (default: $AQS_CONFIG)");
  app.add_option("--channel", channels, "hop=model, e.g. alice-bob=bitflip:3 (repeatable)");
  app.add_option("--out", out_path, "write the transcript here; summary goes to stdout");
  text("--scheme", "scheme", "recovery | appendix");
  text("--seed", "seed", "master seed");
  text("--transport", "transport", "classical | quantum message transport");
  text("--trials", "trials", "attack trials");
  text("--qubits", "qubits", "qubits sampled by intercept-resend");
  text("--strategy", "strategy", "forge | replay | substitute-message | intercept-resend");
  text("--hop", "hop", "hop the attacker sits on");
  text("--l-ratio", "l-ratio", "l as a fraction of n");
  text("--m1-ratio", "m1-ratio", "m1 as a fraction of n");
  text("--message", "message", "message bits, e.g. 0110...");
  text("--amount", "amount", "amount written by the payer");
  text("--payee-amount", "payee-amount", "amount claimed by the payee");
  text("--balance", "balance", "opening balance of the payer account");
  text("--ledger", "ledger", "ledger file, loaded and saved on commit");
  text("--today", "today", "settlement day");
  text("--xi-max", "xi-max", "aborts tolerated before a key expires");
  for (const char* len : {"n", "l", "k", "m1", "m2", "m3", "n1", "n2"}) {
    text(std::string("--") + len, len, "length override");
  }
  flag("--debug", "debug", "log qubit states in the transcript");
  flag("--json", "json", "machine-readable summary");
  flag("--forge", "forge", "dispute a forged signature");
  flag("--replay", "replay", "present the settled package a second time");
  flag("--strict-expiry", "strict-expiry", "reject checks past their expiry day");

  const char* commands[][2] = {
      {"sign-recovery", "sign and verify with message recovery"},
      {"sign-appendix", "sign and verify with the message attached"},
      {"attack", "run an attack suite"},
      {"efficiency", "qubit efficiency and comparison table"},
      {"payment", "register, pay, capture and settle a check"},
      {"dispute", "sign, then let the arbitrator rule on the transcript"}};
  for (auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  aqs_config* raw = nullptr;
  if (auto s = aqs_config_create(&raw); s != AQS_OK) return report(s);
  std::unique_ptr<aqs_config, decltype(&aqs_config_destroy)> config(raw, aqs_config_destroy);

  if (params_file.empty()) {
    if (const char* env = std::getenv("AQS_CONFIG"); env && *env) params_file = env;
  }
  if (!params_file.empty()) {
    if (auto s = aqs_config_load_file(config.get(), params_file.c_str()); s != AQS_OK) {
      return report(s);
    }
  }
  for (const auto& c : channels) {
    const auto eq = c.find('=');
    if (eq == std::string::npos) {
      std::cerr << "aqs: --channel expects hop=model, got '" << c << "'\n";
      return kExitUsage;
    }
    values.emplace_back("channel." + c.substr(0, eq), c.substr(eq + 1));
  }
  for (const auto& [k, v] : values) {
    if (auto s = aqs_config_set(config.get(), k.c_str(), v.c_str()); s != AQS_OK) return report(s);
  }

  aqs_result* result_raw = nullptr;
  if (auto s = aqs_run(config.get(), command.c_str(), &result_raw); s != AQS_OK) {
    return report(s);
  }
  std::unique_ptr<aqs_result, decltype(&aqs_result_destroy)> result(result_raw,
                                                                     aqs_result_destroy);
  if (out_path.empty()) {
    std::cout << aqs_result_transcript(result.get());
    std::cerr << aqs_result_summary(result.get());
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << aqs_result_transcript(result.get());
    if (!out) {
      std::cerr << "aqs: cannot write " << out_path << '\n';
      return kExitFailure;
    }
    std::cout << aqs_result_summary(result.get());
  }
  return aqs_result_exit_code(result.get());
}
