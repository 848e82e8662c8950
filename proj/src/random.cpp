#include "aqs/random.hpp"

#include <array>
#include <limits>

#include "aqs/hash.hpp"

namespace aqs {

std::uint64_t RandomSource::below(std::uint64_t bound) {
  // Rejection sampling keeps the result exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::array<std::uint8_t, 17> input{};
  input[0] = 0x00;
  for (int i = 0; i < 8; ++i) {
    input[1 + i] = static_cast<std::uint8_t>(master >> (56 - 8 * i));
    input[9 + i] = static_cast<std::uint8_t>(index >> (56 - 8 * i));
  }
  return shake256_bits(input, 64).to_uint();
}

}  // namespace aqs
