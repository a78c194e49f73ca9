#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "sheetcalc/chevalley.hpp"
#include "sheetcalc/polyring.hpp"

namespace sheetcalc {

/// Partition of {0, ..., 2k-1} into k ordered pairs: first elements
/// ascending, each pair ascending.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// Sign of the permutation (a_1 b_1 a_2 b_2 ...).
  int sign = 1;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// All (2k-1)!! matchings; the first element is always paired first, partners
/// in increasing order.
std::vector<Matching> enumerate_matchings(std::size_t k);
/// Streams the same sequence without storing it.
void for_each_matching(std::size_t k, const std::function<void(const Matching&)>& visit);

/// (2k-1)!!
std::size_t double_factorial_odd(std::size_t k);

/// Matching-sum map on 2k elements:
/// sum over matchings of sign * prod_i B([x_{a_i}, x_{b_i}], -).
/// Alternating and multilinear in the arguments; homogeneous of degree k.
Poly gamma_map(const LieAlgebra& g, std::span<const LieElement> xs);

/// gamma_map on basis wedges, with the bracket linear forms cached.
class GammaMap {
 public:
  explicit GammaMap(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return *g_; }
  /// gamma_map(Y_{labels[0]}, ..., Y_{labels[2k-1]}).
  Poly on_basis(std::span<const std::size_t> labels) const;
  /// B([Y_a, Y_b], -).
  const Poly& bracket_form(std::size_t a, std::size_t b) const { return forms_[a * n_ + b]; }

 private:
  const LieAlgebra* g_;
  std::size_t n_;
  std::vector<Poly> forms_;
};

/// Default bound on the number of basis wedges visited by rk_space.
inline constexpr std::size_t kDefaultWedgeBudget = 20000;

/// Span of gamma_map over all basis wedges of length 2k; the zero space when
/// 2k > dim g. Throws BudgetError when C(n, 2k) exceeds `budget`.
PolySpace rk_space(const LieAlgebra& g, std::size_t k, std::size_t budget = kDefaultWedgeBudget);

/// One sample that contradicts the expected vanishing pattern.
struct VarietyViolation {
  std::size_t sample = 0;
  std::size_t orbit_dim = 0;
  /// The sample lies below the threshold but some basis element is nonzero.
  bool expected_vanishing = false;
};

struct VarietyReport {
  std::size_t k = 0;
  std::size_t samples = 0;
  std::size_t vanishing = 0;
  std::size_t nonvanishing = 0;
  std::vector<VarietyViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks that x is a common zero of `space` exactly when orbit_dim(x) < 2k.
VarietyReport variety_check(const LieAlgebra& g, std::size_t k, const PolySpace& space,
                            std::span<const LieElement> samples);

}  // namespace sheetcalc
