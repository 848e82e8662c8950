#include "aqs/hash.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include "aqs/error.hpp"

namespace aqs {

std::vector<std::uint8_t> frame_fields(std::span<const BitString> fields) {
  std::vector<std::uint8_t> out;
  for (const auto& field : fields) {
    const auto len = static_cast<std::uint32_t>(field.size());
    out.push_back(static_cast<std::uint8_t>(len >> 24));
    out.push_back(static_cast<std::uint8_t>(len >> 16));
    out.push_back(static_cast<std::uint8_t>(len >> 8));
    out.push_back(static_cast<std::uint8_t>(len));
    auto packed = field.pack();
    out.insert(out.end(), packed.begin(), packed.end());
  }
  return out;
}

BitString shake256_bits(std::span<const std::uint8_t> input, std::size_t out_bits) {
  std::vector<std::uint8_t> digest((out_bits + 7) / 8);
  if (digest.empty()) return {};
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> md(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!md || EVP_DigestInit_ex(md.get(), EVP_shake256(), nullptr) != 1 ||
      EVP_DigestUpdate(md.get(), input.data(), input.size()) != 1 ||
      EVP_DigestFinalXOF(md.get(), digest.data(), digest.size()) != 1) {
    throw std::runtime_error("SHAKE256 failed");
  }
  return BitString::from_bytes(digest, out_bits);
}

BitString tagged_digest(std::uint8_t tag, std::span<const BitString> fields,
                        std::size_t out_bits) {
  auto input = frame_fields(fields);
  input.insert(input.begin(), tag);
  return shake256_bits(input, out_bits);
}

std::size_t HashSuite::output_bits(HashFn fn) const {
  switch (fn) {
    case HashFn::H1: return params_.m1;
    case HashFn::H2: return params_.m2;
    case HashFn::H3: return params_.m3;
  }
  return 0;
}

BitString HashSuite::apply(HashFn fn, std::span<const BitString> fields) const {
  const auto bits = output_bits(fn);
  if (forced_zero_[index(fn)]) return BitString::zeros(bits);
  return tagged_digest(static_cast<std::uint8_t>(fn), fields, bits);
}

}  // namespace aqs
