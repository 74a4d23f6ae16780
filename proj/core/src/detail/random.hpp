#pragma once

#include <cstdint>
#include <random>

namespace slopeforge::detail {

// Portable uniform integer in [0, bound); std distributions are
// implementation-defined, which would break cross-platform determinism.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace slopeforge::detail
