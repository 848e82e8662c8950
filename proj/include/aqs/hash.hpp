#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "aqs/bits.hpp"
#include "aqs/params.hpp"

namespace aqs {

enum class HashFn : std::uint8_t { H1 = 1, H2 = 2, H3 = 3 };

/// Injective framing of an argument tuple: each field is a 32-bit big-endian
/// bit count followed by its bits packed MSB-first, zero-padded to a byte.
std::vector<std::uint8_t> frame_fields(std::span<const BitString> fields);

/// First `out_bits` bits of SHAKE256(input).
BitString shake256_bits(std::span<const std::uint8_t> input, std::size_t out_bits);

/// SHAKE256(tag || frame(fields)) truncated to `out_bits`.
BitString tagged_digest(std::uint8_t tag, std::span<const BitString> fields, std::size_t out_bits);

/// h1, h2 and h3 with output lengths m1, m2, m3. Each function can be forced
/// to return all zeros, which turns the masking XOR into the identity for tests.
class HashSuite {
 public:
  explicit HashSuite(const ProtocolParams& params) : params_(params) {}

  BitString h1(std::initializer_list<BitString> fields) const { return apply(HashFn::H1, fields); }
  BitString h2(std::initializer_list<BitString> fields) const { return apply(HashFn::H2, fields); }
  BitString h3(std::initializer_list<BitString> fields) const { return apply(HashFn::H3, fields); }
  BitString apply(HashFn fn, std::span<const BitString> fields) const;
  BitString apply(HashFn fn, std::initializer_list<BitString> fields) const {
    return apply(fn, std::span<const BitString>(fields.begin(), fields.size()));
  }

  std::size_t output_bits(HashFn fn) const;

  void force_zero(HashFn fn, bool on = true) { forced_zero_[index(fn)] = on; }

 private:
  static std::size_t index(HashFn fn) { return static_cast<std::size_t>(fn) - 1; }

  ProtocolParams params_;
  std::array<bool, 3> forced_zero_{};
};

/// The parameter set and hash functions every protocol step runs against.
struct ProtocolContext {
  explicit ProtocolContext(const ProtocolParams& p) : params(p), hash(p) { params.validate(); }

  ProtocolParams params;
  HashSuite hash;
};

}  // namespace aqs
