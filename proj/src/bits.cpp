#include "aqs/bits.hpp"

#include <algorithm>
#include <numeric>

#include "aqs/error.hpp"
#include "aqs/random.hpp"

namespace aqs {

BitString::BitString(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) bits_.push_back(static_cast<Bit>(b & 1));
}

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b &= 1u;
}

BitString BitString::zeros(std::size_t length) { return BitString(std::vector<Bit>(length, 0)); }

BitString BitString::ones(std::size_t length) { return BitString(std::vector<Bit>(length, 1)); }

BitString BitString::parse(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidConfig, "bit string may only contain '0' and '1'");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return BitString(std::move(bits));
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
  std::vector<Bit> bits(width, 0);
  for (std::size_t i = 0; i < width && i < 64; ++i) {
    bits[width - 1 - i] = static_cast<Bit>((value >> i) & 1u);
  }
  return BitString(std::move(bits));
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t length) {
  if (length > bytes.size() * 8) {
    throw Error(ErrorCode::LengthMismatch, "not enough bytes for requested bit length");
  }
  std::vector<Bit> bits(length);
  for (std::size_t i = 0; i < length; ++i) {
    bits[i] = static_cast<Bit>((bytes[i / 8] >> (7 - i % 8)) & 1u);
  }
  return BitString(std::move(bits));
}

std::uint64_t BitString::to_uint() const {
  if (bits_.size() > 64) throw Error(ErrorCode::LengthMismatch, "bit string wider than 64 bits");
  std::uint64_t v = 0;
  for (Bit b : bits_) v = (v << 1) | b;
  return v;
}

std::vector<std::uint8_t> BitString::pack() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out[i / 8] |= static_cast<std::uint8_t>(bits_[i] << (7 - i % 8));
  }
  return out;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

std::size_t BitString::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), Bit{1}));
}

BitString xor_bits(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "xor of strings with lengths " +
                                               std::to_string(a.size()) + " and " +
                                               std::to_string(b.size()));
  }
  std::vector<Bit> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return BitString(std::move(out));
}

BitString concat(std::span<const BitString> parts) {
  std::vector<Bit> out;
  for (const auto& p : parts) out.insert(out.end(), p.bits().begin(), p.bits().end());
  return BitString(std::move(out));
}

BitString concat(std::initializer_list<BitString> parts) {
  return concat(std::span<const BitString>(parts.begin(), parts.size()));
}

std::vector<BitString> split(const BitString& s, std::span<const std::size_t> lengths) {
  const auto total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  if (total != s.size()) {
    throw Error(ErrorCode::LengthMismatch, "split lengths sum to " + std::to_string(total) +
                                               " but string has " + std::to_string(s.size()) +
                                               " bits");
  }
  std::vector<BitString> out;
  out.reserve(lengths.size());
  auto bits = s.bits();
  std::size_t pos = 0;
  for (std::size_t len : lengths) {
    out.emplace_back(std::vector<Bit>(bits.begin() + pos, bits.begin() + pos + len));
    pos += len;
  }
  return out;
}

std::vector<BitString> split(const BitString& s, std::initializer_list<std::size_t> lengths) {
  return split(s, std::span<const std::size_t>(lengths.begin(), lengths.size()));
}

BitString random_bits(std::size_t length, RandomSource& rng) {
  std::vector<Bit> out(length);
  for (auto& b : out) b = rng.bit();
  return BitString(std::move(out));
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  return xor_bits(a, b).popcount();
}

}  // namespace aqs
