#pragma once

#include <cstdint>
#include <random>

namespace folim {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n) by rejection; identical on every platform
/// (unlike std::uniform_int_distribution). n must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % n;
}

inline bool coin(Rng& rng, std::uint64_t num, std::uint64_t den) { return uniform_below(rng, den) < num; }

}  // namespace folim
