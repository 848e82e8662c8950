#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aqs/params.hpp"
#include "aqs/transcript.hpp"

namespace aqs {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Accepts "a/b" or "a".
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::string to_string() const;
  /// "10%", "12%", "12.5%" ... ; exact up to four decimals, otherwise rounded.
  std::string percent() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Counts gathered from a transcript: B_s, Q_t, B_t.
struct TransmissionTally {
  std::size_t signed_bits = 0;
  std::size_t qubits = 0;
  std::size_t classical_bits = 0;

  friend bool operator==(const TransmissionTally&, const TransmissionTally&) = default;
};

/// Every QubitSend adds its qubit count, every ClassicalSend its bit count.
/// Throws MalformedTranscript for an empty or unfinished transcript.
TransmissionTally tally(const Transcript& transcript);

/// eta = B_s / (Q_t + B_t). Throws DivisionByZero when nothing was sent.
Rational eta(const TransmissionTally& t);

/// Smallest parameter set with l = l_ratio * n and m1 = m1_ratio * n,
/// n >= 32, and the remaining m1 - n bits split between k and m2.
ProtocolParams params_for_ratios(const Rational& l_ratio, const Rational& m1_ratio);

struct EfficiencyMeasurement {
  ProtocolParams params;
  Transcript transcript;
  TransmissionTally counts;
  Rational efficiency;
};

/// Runs one honest message-recovery round at the given ratios and measures it.
EfficiencyMeasurement measure_recovery_efficiency(const Rational& l_ratio,
                                                  const Rational& m1_ratio, std::uint64_t seed);

struct ComparisonRow {
  std::string scheme;
  Rational efficiency;
  bool published = true;  // false for rows measured from a live run
};

/// Published figures for earlier arbitrated schemes, followed by this
/// library's message-recovery scheme measured at l=n/2, m1=3n/2 and l=n/3, m1=4n/3.
std::vector<ComparisonRow> comparison_table(std::uint64_t seed = 0);

}  // namespace aqs
