#ifndef OCTIC_ARITH_RANDOM_HPP
#define OCTIC_ARITH_RANDOM_HPP

#include <cstdint>
#include <random>

namespace octic {

/// Integers in [lo, hi] from a 64-bit engine, by rejection. Unlike the
/// standard distributions this is reproducible across library vendors.
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(rng());
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do v = rng(); while (v >= limit);
  return lo + static_cast<long>(v % span);
}

}  // namespace octic

#endif  // OCTIC_ARITH_RANDOM_HPP
