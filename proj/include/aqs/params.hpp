#pragma once

#include <cstddef>
#include <string>

namespace aqs {

/// Length parameters shared by both signature schemes.
///   m1 = n + m2 + k,  m3 = l + k,  n1 = l + m1,  n2 = l + m3
struct ProtocolParams {
  std::size_t n = 32;   // message bits (message-recovery scheme)
  std::size_t l = 16;   // nonce bits
  std::size_t k = 16;   // identity bits
  std::size_t m1 = 64;
  std::size_t m2 = 16;
  std::size_t m3 = 32;
  std::size_t n1 = 80;  // key bits, message-recovery scheme
  std::size_t n2 = 48;  // key bits, appendix scheme

  /// Fills m1, m3, n1, n2 from the four free lengths.
  static ProtocolParams derive(std::size_t n, std::size_t l, std::size_t k, std::size_t m2);
  static ProtocolParams defaults() { return derive(32, 16, 16, 16); }

  /// Throws InvalidParams naming the first violated constraint.
  void validate() const;

  friend bool operator==(const ProtocolParams&, const ProtocolParams&) = default;
};

inline constexpr unsigned kDefaultXiMax = 3;

}  // namespace aqs
