#include "aqs/efficiency.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "aqs/error.hpp"
#include "aqs/hash.hpp"
#include "aqs/recovery.hpp"

namespace aqs {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Rational Rational::parse(std::string_view text) {
  auto to_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::InvalidConfig, "bad ratio '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(to_int(text));
  const auto den = to_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidConfig, "ratio with zero denominator");
  return Rational(to_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::percent() const {
  // Scale to 1/10000 of a percent and trim trailing zeros.
  const std::int64_t scaled = (num_ * 1000000 + (num_ >= 0 ? den_ / 2 : -den_ / 2)) / den_;
  std::string whole = std::to_string(std::llabs(scaled) / 10000);
  std::string frac = std::to_string(std::llabs(scaled) % 10000);
  frac.insert(0, 4 - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = scaled < 0 ? "-" : "";
  out += whole;
  if (!frac.empty()) out += "." + frac;
  return out + "%";
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

TransmissionTally tally(const Transcript& transcript) {
  if (transcript.empty()) throw Error(ErrorCode::MalformedTranscript, "empty transcript");
  TransmissionTally t;
  t.signed_bits = transcript.signed_bits();
  bool finished = false;
  for (const auto& e : transcript.events()) {
    switch (e.kind) {
      case EventKind::QubitSend: t.qubits += e.qubits; break;
      case EventKind::ClassicalSend: t.classical_bits += e.bits; break;
      case EventKind::Verdict: finished = true; break;
      case EventKind::Failure:
        throw Error(ErrorCode::MalformedTranscript, "transcript records a failed run");
      default: break;
    }
  }
  if (!finished) throw Error(ErrorCode::MalformedTranscript, "transcript has no verdict");
  return t;
}

Rational eta(const TransmissionTally& t) {
  const auto sent = t.qubits + t.classical_bits;
  if (sent == 0) throw Error(ErrorCode::DivisionByZero, "no qubits or classical bits were sent");
  return Rational(static_cast<std::int64_t>(t.signed_bits), static_cast<std::int64_t>(sent));
}

ProtocolParams params_for_ratios(const Rational& l_ratio, const Rational& m1_ratio) {
  if (!(Rational(0) < l_ratio) || !(Rational(1) < m1_ratio)) {
    throw Error(ErrorCode::InvalidConfig, "need l-ratio > 0 and m1-ratio > 1");
  }
  const auto step = std::lcm(l_ratio.den(), m1_ratio.den());
  for (std::int64_t n = step; n <= 1 << 20; n += step) {
    const auto l = (l_ratio * Rational(n)).num();
    const auto m1 = (m1_ratio * Rational(n)).num();
    if (n < 32 || m1 - n < 2) continue;
    const auto k = (m1 - n) / 2;
    auto p = ProtocolParams::derive(static_cast<std::size_t>(n), static_cast<std::size_t>(l),
                                    static_cast<std::size_t>(k),
                                    static_cast<std::size_t>(m1 - n - k));
    p.validate();
    return p;
  }
  throw Error(ErrorCode::InvalidConfig, "ratios need an unreasonably long message");
}

EfficiencyMeasurement measure_recovery_efficiency(const Rational& l_ratio,
                                                  const Rational& m1_ratio, std::uint64_t seed) {
  EfficiencyMeasurement m;
  m.params = params_for_ratios(l_ratio, m1_ratio);
  ProtocolContext ctx(m.params);
  auto parties = Parties::provision(Identities::defaults(m.params.k), m.params.n1,
                                    derive_seed(seed, 0));
  RandomSource rng(derive_seed(seed, 1));
  auto message = random_bits(m.params.n, rng);
  auto result = recovery::run(message, parties, RunOptions{}, ctx, derive_seed(seed, 2));
  if (!result.verdict || !result.verdict->accepted()) {
    throw Error(ErrorCode::MalformedTranscript, "honest efficiency run did not accept");
  }
  m.transcript = std::move(result.transcript);
  m.counts = tally(m.transcript);
  m.efficiency = eta(m.counts);
  return m;
}

std::vector<ComparisonRow> comparison_table(std::uint64_t seed) {
  std::vector<ComparisonRow> rows{
      {"GHZ-state arbitrated scheme", Rational(9, 100)},
      {"GHZ scheme with public board", Rational(12, 100)},
      {"GHZ scheme without public board", Rational(11, 100)},
      {"stabilizer-code scheme", Rational(11, 100)},
      {"measurement-only scheme with shared MAC string", Rational(11, 100)},
  };
  auto half = measure_recovery_efficiency(Rational(1, 2), Rational(3, 2), seed);
  rows.push_back({"this library, l=n/2 m1=3n/2", half.efficiency, false});
  auto third = measure_recovery_efficiency(Rational(1, 3), Rational(4, 3), seed);
  rows.push_back({"this library, l=n/3 m1=4n/3", third.efficiency, false});
  return rows;
}

}  // namespace aqs
