#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sheetcalc/linalg.hpp"
#include "sheetcalc/rational.hpp"
#include "sheetcalc/rootdata.hpp"

namespace sheetcalc {

/// Element of g as a coordinate vector over the Chevalley basis.
struct LieElement {
  std::vector<Rational> coords;

  LieElement() = default;
  explicit LieElement(std::size_t n) : coords(n) {}
  explicit LieElement(std::vector<Rational> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

/// Sparse coordinate vector: (basis index, coefficient), sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Simple Lie algebra over Q with a Chevalley basis.
///
/// Basis order: h_1..h_l, then e_phi for phi in the positive-root order, then
/// e_{-phi} in the same order. Root vectors are fixed by
/// e_xi = [e_alpha, e_beta] / (p + 1) on each extraspecial pair (alpha, beta),
/// so N_{alpha,beta} = p + 1 > 0 there, and [e_phi, e_{-phi}] = h_phi.
class LieAlgebra {
 public:
  const RootSystem& roots() const { return rs_; }
  std::size_t dim() const { return n_; }
  std::size_t rank() const { return rs_.rank(); }
  std::size_t num_positive() const { return rs_.num_positive(); }

  std::size_t cartan_index(std::size_t i) const { return i; }
  std::size_t positive_index(std::size_t k) const { return rank() + k; }
  std::size_t negative_index(std::size_t k) const { return rank() + num_positive() + k; }
  /// Root of a basis element over the simple roots (zero for h_i).
  const Root& weight(std::size_t a) const { return weights_[a]; }
  std::string label(std::size_t a) const;

  /// [Y_a, Y_b] in basis coordinates.
  const SparseVec& structure(std::size_t a, std::size_t b) const { return structure_[a][b]; }
  /// Killing Gram matrix B(Y_a, Y_b) and its inverse.
  const Matrix& killing() const { return killing_; }
  const Matrix& killing_inverse() const { return killing_inv_; }
  /// Matrices of the basis elements in the classical defining realisation.
  const std::vector<Matrix>& realization() const { return realization_; }

  LieElement zero() const { return LieElement(n_); }
  LieElement basis_element(std::size_t a) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  Rational killing_form(const LieElement& x, const LieElement& y) const;
  /// Matrix of ad x: column d holds [x, Y_d].
  Matrix ad(const LieElement& x) const;
  /// dim [g, x] as the exact rank of ad x.
  std::size_t orbit_dim(const LieElement& x) const;
  /// Sum of the simple root vectors.
  LieElement regular_nilpotent() const;
  /// exp(ad(c e)) x for nilpotent e, evaluated exactly.
  LieElement exp_ad(const LieElement& e, const LieElement& x) const;

 private:
  friend LieAlgebra build_lie_algebra(const RootSystem& rs);

/// Exhaustive structural checks over basis pairs and triples.
struct StructureReport {
  std::size_t triples = 0;
  std::size_t antisymmetry_failures = 0;
  /// Basis triples a < b < c violating the Jacobi identity.
  std::size_t jacobi_failures = 0;
  /// Basis triples with B([a, b], c) != B(a, [b, c]).
  std::size_t invariance_failures = 0;
  bool killing_nondegenerate = false;
  bool passed() const {
    return antisymmetry_failures == 0 && jacobi_failures == 0 && invariance_failures == 0 && killing_nondegenerate;
  }
};

StructureReport check_structure(const LieAlgebra& g);

  void check(const LieElement& x) const;

  RootSystem rs_;
  std::size_t n_ = 0;
  std::vector<Root> weights_;
  std::vector<std::vector<SparseVec>> structure_;
  Matrix killing_;
  Matrix killing_inv_;
  std::vector<Matrix> realization_;
};

LieAlgebra build_lie_algebra(const RootSystem& rs);

/// Exhaustive structural checks over basis pairs and triples.
struct StructureReport {
  std::size_t triples = 0;
  std::size_t antisymmetry_failures = 0;
  /// Basis triples a < b < c violating the Jacobi identity.
  std::size_t jacobi_failures = 0;
  /// Basis triples with B([a, b], c) != B(a, [b, c]).
  std::size_t invariance_failures = 0;
  bool killing_nondegenerate = false;
  bool passed() const {
    return antisymmetry_failures == 0 && jacobi_failures == 0 && invariance_failures == 0 && killing_nondegenerate;
  }
};

StructureReport check_structure(const LieAlgebra& g);

/// Result of the stratum sampler.
struct SampleSet {
  std::vector<LieElement> elements;
  /// The sampler found no element of the requested orbit dimension.
  bool unreachable = false;
  /// Fewer elements than requested were returned.
  bool short_of_count = false;
};

/// Deterministic (under `seed`) elements x with orbit_dim(x) == stratum.
///
/// Candidates are semisimple points on intersections of root hyperplanes,
/// those points plus Levi root vectors, root vectors and sums of two root
/// vectors, each moved by random unipotent conjugations exp(c ad e_{+-phi}).
/// Stratum 0 of a simple algebra is the single point 0.
SampleSet sample_elements(const LieAlgebra& g, std::size_t stratum, std::size_t count, std::uint64_t seed);

}  // namespace sheetcalc
