#pragma once

#include <cstdint>
#include <random>

#include "aqs/bits.hpp"

namespace aqs {

/// Seedable source of randomness. Every random choice in the simulator is
/// drawn from one of these; nothing touches global state.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  Bit bit() { return static_cast<Bit>(engine_() >> 63); }
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Seed for trial `index` of a run seeded with `master`:
/// the first 8 bytes (big-endian) of SHAKE256(0x00 || u64be(master) || u64be(index)).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace aqs
