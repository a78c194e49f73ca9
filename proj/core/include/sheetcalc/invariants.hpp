#pragma once

#include <cstddef>
#include <vector>

#include "sheetcalc/chevalley.hpp"
#include "sheetcalc/linalg.hpp"
#include "sheetcalc/polyring.hpp"

namespace sheetcalc {

/// Matrix representation: one dim x dim matrix per Chevalley basis element.
struct MatrixRep {
  std::size_t dim = 0;
  std::vector<Matrix> mats;

  /// pi(x) = sum_a x_a mats[a].
  Matrix image(const LieElement& x) const;
};

/// Number of basis pairs (a, b), a < b, with pi([Y_a, Y_b]) != [pi(Y_a), pi(Y_b)].
std::size_t homomorphism_failures(const LieAlgebra& g, const MatrixRep& rep);

/// Classical defining representation; throws RepresentationError if the
/// homomorphism check fails.
MatrixRep defining_rep(const LieAlgebra& g);
/// pi(Y_a) = ad Y_a.
MatrixRep adjoint_rep(const LieAlgebra& g);

/// Generic element sum_j y_j pi(Y_j) as a matrix of linear polynomials.
std::vector<std::vector<Poly>> generic_matrix(const LieAlgebra& g, const MatrixRep& rep);

/// Homogeneous generators of the invariant ring, ascending degree:
/// trace powers of the generic defining matrix (plus a Pfaffian in type D),
/// each adjusted to be orthogonal to products of lower generators so that
/// all first partials are harmonic.
///
/// Throws GeneratorError on a non-invariant generator, a Jacobian of rank
/// below the rank of g at the regular nilpotent, or a non-harmonic partial.
std::vector<Poly> chevalley_generators(const LieAlgebra& g);

/// The unadjusted trace-power (and Pfaffian) generators.
std::vector<Poly> raw_generators(const LieAlgebra& g);

/// l x n Jacobian of the generators, entries[i][j] = d p_i / d y_j.
struct QMatrix {
  std::vector<std::vector<Poly>> entries;
  std::vector<unsigned> degrees;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
  /// Q evaluated at x.
  Matrix at(const LieElement& x) const;
};

QMatrix q_matrix(const LieAlgebra& g, const std::vector<Poly>& gens);

/// Default bound on the number of minors visited by minors_space.
inline constexpr std::size_t kDefaultMinorBudget = 5000;

/// Span of all l x l minors of Q. Throws BudgetError when C(n, l) > budget.
PolySpace minors_space(const QMatrix& q, std::size_t budget = kDefaultMinorBudget);

/// Determinant of a square matrix of polynomials by cofactor expansion.
Poly poly_determinant(const std::vector<std::vector<Poly>>& m);

}  // namespace sheetcalc
