#include "aqs/config.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "aqs/error.hpp"
#include "aqs/payment.hpp"

namespace aqs {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void invalid(const std::string& key, const std::string& why) {
  throw Error(ErrorCode::InvalidConfig, key + ": " + why);
}

std::uint64_t to_unsigned(const std::string& key, const std::string& value,
                          std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() || v > max) {
    invalid(key, "expected a non-negative integer, got '" + value + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  invalid(key, "expected true or false, got '" + value + "'");
}

const std::set<std::string, std::less<>> kHops{
    std::string(kHopAliceBob), std::string(kHopBobArbitrator), std::string(kHopArbitratorBob),
    std::string(payment::kHopPayerPayee), std::string(payment::kHopPayeeBank)};

}  // namespace

ConfigMap parse_config_text(std::string_view text) {
  ConfigMap out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidConfig,
                  "line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    out[trim(std::string_view(content).substr(0, eq))] =
        trim(std::string_view(content).substr(eq + 1));
  }
  return out;
}

ConfigMap read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

RunConfig parse_config(const ConfigMap& file, const ConfigMap& flags) {
  ConfigMap merged = file;
  for (const auto& [k, v] : flags) merged[k] = v;

  RunConfig c;
  std::map<std::string, std::size_t> lengths;
  for (const auto& [key, value] : merged) {
    try {
      if (key == "scheme") {
        c.scheme = parse_scheme(value);
      } else if (key == "seed") {
        c.seed = to_unsigned(key, value);
      } else if (key == "n" || key == "l" || key == "k" || key == "m1" || key == "m2" ||
                 key == "m3" || key == "n1" || key == "n2") {
        lengths[key] = to_unsigned(key, value, 1u << 20);
      } else if (key == "xi-max") {
        c.xi_max = to_unsigned(key, value);
      } else if (key.starts_with("channel.")) {
        const auto hop = key.substr(8);
        if (!kHops.contains(hop)) invalid(key, "no hop named '" + hop + "'");
        c.channels[hop] = ChannelModel::parse(value);
      } else if (key == "transport") {
        c.transport = parse_transport(value);
      } else if (key == "trials") {
        c.trials = to_unsigned(key, value);
      } else if (key == "qubits") {
        c.qubits = to_unsigned(key, value);
      } else if (key == "strategy") {
        c.strategy = parse_strategy(value);
      } else if (key == "hop") {
        if (!kHops.contains(value)) invalid(key, "no hop named '" + value + "'");
        c.hop = value;
      } else if (key == "l-ratio") {
        c.l_ratio = Rational::parse(value);
      } else if (key == "m1-ratio") {
        c.m1_ratio = Rational::parse(value);
      } else if (key == "message") {
        c.message = BitString::parse(value);
      } else if (key == "debug") {
        c.debug = to_bool(key, value);
      } else if (key == "json") {
        c.json = to_bool(key, value);
      } else if (key == "forge") {
        c.forge = to_bool(key, value);
      } else if (key == "amount") {
        c.amount = static_cast<std::uint32_t>(to_unsigned(key, value, 0xffffffffu));
      } else if (key == "payee-amount") {
        c.payee_amount = static_cast<std::uint32_t>(to_unsigned(key, value, 0xffffffffu));
      } else if (key == "balance") {
        c.balance = to_unsigned(key, value);
      } else if (key == "replay") {
        c.replay = to_bool(key, value);
      } else if (key == "ledger") {
        if (value.empty()) invalid(key, "empty path");
        c.ledger = value;
      } else if (key == "strict-expiry") {
        c.strict_expiry = to_bool(key, value);
      } else if (key == "today") {
        c.today = static_cast<std::uint32_t>(to_unsigned(key, value, 0xffffffffu));
      } else {
        invalid(key, "unknown setting");
      }
    } catch (const Error& e) {
      const bool named = std::string_view(e.what()).starts_with(key + ":");
      if (e.code() == ErrorCode::InvalidConfig && named) throw;
      invalid(key, e.what());
    }
  }

  auto get = [&](const char* key, std::size_t fallback) {
    auto it = lengths.find(key);
    return it == lengths.end() ? fallback : it->second;
  };
  const auto d = ProtocolParams::defaults();
  const auto n = get("n", d.n);
  const auto l = get("l", d.l);
  const auto k = get("k", d.k);
  std::size_t m2 = d.m2;
  if (lengths.contains("m2")) {
    m2 = lengths["m2"];
  } else if (lengths.contains("m1")) {
    if (lengths["m1"] <= n + k) invalid("m1", "m1 must equal n + m2 + k with m2 > 0");
    m2 = lengths["m1"] - n - k;
  }
  c.params = ProtocolParams::derive(n, l, k, m2);
  // Explicit derived lengths must agree with the algebra.
  for (const char* key : {"m1", "m3", "n1", "n2"}) {
    if (!lengths.contains(key)) continue;
    const auto given = lengths[key];
    if (key == std::string_view("m1")) c.params.m1 = given;
    if (key == std::string_view("m3")) c.params.m3 = given;
    if (key == std::string_view("n1")) c.params.n1 = given;
    if (key == std::string_view("n2")) c.params.n2 = given;
  }
  try {
    c.params.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("params: ") + e.what());
  }
  return c;
}

}  // namespace aqs
