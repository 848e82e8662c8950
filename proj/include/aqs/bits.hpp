#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aqs {

using Bit = std::uint8_t;

class RandomSource;

/// Ordered sequence of bits. Index 0 is the first (leftmost) bit; when a
/// string is read as an integer or packed into bytes it is MSB-first.
class BitString {
 public:
  BitString() = default;
  BitString(std::initializer_list<int> bits);
  explicit BitString(std::vector<Bit> bits);

  static BitString zeros(std::size_t length);
  static BitString ones(std::size_t length);
  /// Parses a string of '0'/'1' characters. Throws InvalidConfig otherwise.
  static BitString parse(std::string_view text);
  static BitString from_uint(std::uint64_t value, std::size_t width);
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t length);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  Bit at(std::size_t i) const { return bits_.at(i); }
  void set(std::size_t i, Bit b) { bits_.at(i) = b & 1u; }
  void flip(std::size_t i) { bits_.at(i) ^= 1u; }
  void push_back(Bit b) { bits_.push_back(b & 1u); }

  std::span<const Bit> bits() const noexcept { return bits_; }
  std::uint64_t to_uint() const;
  std::vector<std::uint8_t> pack() const;
  std::string to_string() const;
  std::size_t popcount() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<Bit> bits_;
};

BitString xor_bits(const BitString& a, const BitString& b);
BitString concat(std::initializer_list<BitString> parts);
BitString concat(std::span<const BitString> parts);
std::vector<BitString> split(const BitString& s, std::span<const std::size_t> lengths);
std::vector<BitString> split(const BitString& s, std::initializer_list<std::size_t> lengths);
BitString random_bits(std::size_t length, RandomSource& rng);
std::size_t hamming_distance(const BitString& a, const BitString& b);

}  // namespace aqs
