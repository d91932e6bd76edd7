#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace folim {

/// A number in [0,1) as a 64-bit binary fraction x / 2^64.
using Frac = std::uint64_t;

/// floor(sqrt(2) * 2^64) mod 2^64, i.e. the fractional part of sqrt(2).
inline constexpr Frac kSqrt2Frac = 0x6a09e667f3bcc908ULL;

inline Frac rotate(Frac x) noexcept { return x + kSqrt2Frac; }
inline Frac rotate_inv(Frac x) noexcept { return x - kSqrt2Frac; }
/// m * x mod 1.
inline Frac scale_mod1(std::uint64_t m, Frac x) noexcept { return m * x; }
/// floor(x * k).
inline std::uint64_t floor_times(Frac x, std::uint64_t k) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * k) >> 64);
}
inline double to_double(Frac x) noexcept { return static_cast<double>(x) * 0x1p-64; }

/// Splits the binary digits: odd positions (1st, 3rd, ... after the point)
/// form the first fraction, even positions the second. Each result carries
/// 32 significant bits in its high half.
std::pair<Frac, Frac> zeta(Frac t) noexcept;
/// Interleaves the high 32 bits of s and u back into one fraction.
Frac zeta_inv(Frac s, Frac u) noexcept;

/// One-sample Kolmogorov-Smirnov statistic against Uniform[0,1).
double ks_uniform_statistic(std::vector<double> xs);
/// Asymptotic 1% critical value 1.6276 / sqrt(n).
double ks_critical_1pct(std::size_t n);

}  // namespace folim
