#include "folim/fixed_point.hpp"

#include <algorithm>
#include <cmath>

namespace folim {
namespace {

// Gathers the even-indexed bits (bit 0, 2, ..., 62) of x into the low 32 bits.
std::uint64_t compact(std::uint64_t x) {
  x &= 0x5555555555555555ULL;
  x = (x | (x >> 1)) & 0x3333333333333333ULL;
  x = (x | (x >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
  x = (x | (x >> 4)) & 0x00ff00ff00ff00ffULL;
  x = (x | (x >> 8)) & 0x0000ffff0000ffffULL;
  x = (x | (x >> 16)) & 0x00000000ffffffffULL;
  return x;
}

std::uint64_t spread(std::uint64_t x) {
  x &= 0x00000000ffffffffULL;
  x = (x | (x << 16)) & 0x0000ffff0000ffffULL;
  x = (x | (x << 8)) & 0x00ff00ff00ff00ffULL;
  x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  x = (x | (x << 2)) & 0x3333333333333333ULL;
  x = (x | (x << 1)) & 0x5555555555555555ULL;
  return x;
}

}  // namespace

// Position 1 after the point is bit 63, so odd positions are the odd bits.
std::pair<Frac, Frac> zeta(Frac t) noexcept { return {compact(t >> 1) << 32, compact(t) << 32}; }

Frac zeta_inv(Frac s, Frac u) noexcept { return (spread(s >> 32) << 1) | spread(u >> 32); }

double ks_uniform_statistic(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double lo = static_cast<double>(i) / n, hi = static_cast<double>(i + 1) / n;
    d = std::max({d, hi - xs[i], xs[i] - lo});
  }
  return d;
}

double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

}  // namespace folim
