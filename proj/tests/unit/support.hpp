#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sheetcalc/chevalley.hpp"
#include "sheetcalc/linalg.hpp"
#include "sheetcalc/polyring.hpp"
#include "sheetcalc/random.hpp"

namespace sheetcalc::testing {

inline LieAlgebra algebra(const char* type, bool low_rank_d = false) {
  RootSystemOptions opts;
  opts.allow_low_rank_d = low_rank_d;
  return build_lie_algebra(build_root_system(CartanType::parse(type), opts));
}

/// Small rationals with denominators 1..3, zero allowed.
inline Rational random_rational(SplitMix64& rng) {
  Rational q(rng.uniform(-6, 6), rng.uniform(1, 3));
  q.canonicalize();
  return q;
}

inline Matrix random_matrix(std::size_t n, SplitMix64& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
  return m;
}

inline Matrix random_skew(std::size_t n, SplitMix64& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_rational(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline LieElement random_element(std::size_t n, SplitMix64& rng) {
  LieElement x(n);
  for (auto& c : x.coords) c = random_rational(rng);
  return x;
}

/// Homogeneous polynomial of degree d with at most `terms` monomials.
inline Poly random_poly(std::size_t nvars, unsigned d, std::size_t terms, SplitMix64& rng) {
  Poly p(nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (unsigned i = 0; i < d; ++i) m.raise(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(nvars) - 1)));
    p.add_term(m, random_rational(rng));
  }
  return p;
}

inline std::vector<std::uint64_t> seeds(std::size_t count, std::uint64_t base = 1) {
  std::vector<std::uint64_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = base + 7919 * i;
  return out;
}

}  // namespace sheetcalc::testing
