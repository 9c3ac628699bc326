#pragma once

#include <cstdint>
#include <random>

namespace tridecomp {

// std::mt19937_64 output is fixed by the standard; the distributions are not, so the
// few we need are spelled out here to keep seeded output identical across toolchains.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// Uniform real in [lo, hi].
inline double uniform_between(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

}  // namespace tridecomp
