#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "aqs/attacks.hpp"
#include "aqs/bits.hpp"
#include "aqs/efficiency.hpp"
#include "aqs/params.hpp"
#include "aqs/protocol.hpp"
#include "aqs/qubit.hpp"

namespace aqs {

using ConfigMap = std::map<std::string, std::string>;

/// Everything a command needs. Built from flat key/value pairs:
///
///   scheme, seed, n, l, k, m1, m2, m3, n1, n2, xi-max,
///   channel.<hop>, transport, trials, qubits, strategy, hop,
///   l-ratio, m1-ratio, message, debug, json, forge,
///   amount, payee-amount, balance, replay, ledger, strict-expiry, today
struct RunConfig {
  Scheme scheme = Scheme::Recovery;
  ProtocolParams params = ProtocolParams::defaults();
  std::size_t xi_max = kDefaultXiMax;
  std::uint64_t seed = 0;
  std::map<std::string, ChannelModel> channels;
  Transport transport = Transport::ClassicalP;

  std::size_t trials = 1000;
  std::size_t qubits = 100000;
  Strategy strategy = Strategy::ForgeWithoutKey;
  std::string hop;

  Rational l_ratio{1, 2};
  Rational m1_ratio{3, 2};

  std::optional<BitString> message;
  bool debug = false;
  bool json = false;
  bool forge = false;

  std::uint32_t amount = 50;
  std::uint32_t payee_amount = 50;
  std::uint64_t balance = 100;
  bool replay = false;
  std::optional<std::string> ledger;
  bool strict_expiry = false;
  std::uint32_t today = 0;
};

/// "key = value" lines; blank lines and '#' comments are skipped.
ConfigMap parse_config_text(std::string_view text);
ConfigMap read_config_file(const std::string& path);

/// Applies `file` then `flags` (flags win) over the defaults and validates.
/// Throws InvalidConfig naming the offending key or violated constraint.
RunConfig parse_config(const ConfigMap& file, const ConfigMap& flags = {});

}  // namespace aqs
