#pragma once

#include <cstdint>

#include "sheetcalc/rational.hpp"

namespace sheetcalc {

/// SplitMix64: small, portable, seedable. Sequences are identical on every
/// platform, unlike the standard distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] (modulo bias is negligible for small spans).
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// Integer-valued rational with numerator in [lo, hi].
  Rational small_rational(long lo = -9, long hi = 9) { return Rational(uniform(lo, hi)); }

 private:
  std::uint64_t state_;
};

}  // namespace sheetcalc
