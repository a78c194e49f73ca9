#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sheetcalc/chevalley.hpp"
#include "sheetcalc/invariants.hpp"
#include "sheetcalc/linalg.hpp"

namespace sheetcalc {

/// Largest k accepted by std_identity.
inline constexpr std::size_t kMaxIdentityDegree = 10;

/// sum over permutations s of sign(s) x_{s(1)} ... x_{s(k)}.
///
/// Evaluated by expansion along the first factor, memoised over subsets:
/// S(T) = sum_{t in T} (-1)^{#{u in T : u < t}} x_t S(T \ t), about 2^k k
/// matrix products. Throws BudgetError for k > kMaxIdentityDegree,
/// DimensionError on shape mismatch or an empty argument list.
Matrix std_identity(std::span<const Matrix> xs);

/// The same sum over the permutation tree, sharing prefix products
/// (about e k! products). Same errors.
Matrix std_identity_tree(std::span<const Matrix> xs);

/// Matrix unit E_{ij} of size n.
Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);

/// Nilpotency index of m (smallest k with m^k = 0); 0 when m is not nilpotent.
std::size_t nilpotency_index(const Matrix& m);

/// Nilpotency index of pi(e) at the regular nilpotent e; every root vector
/// must have index at most this value. Throws RepresentationError when the
/// image of a nilpotent element is not nilpotent or a root vector exceeds
/// the regular value.
std::size_t epsilon(const MatrixRep& rep, const LieAlgebra& g);

/// Outcome of one family of identity checks.
struct IdentityCase {
  std::string name;
  std::size_t matrix_size = 0;
  std::size_t degree = 0;
  std::size_t trials = 0;
  /// Trials where the identity of `degree` was nonzero.
  std::size_t failures = 0;
  /// A nonzero value of the identity of degree - 1 was found among the trials
  /// (informational).
  bool lower_degree_witness = false;
};

struct StandardReport {
  std::vector<IdentityCase> cases;

  bool passed() const;
};

/// Degree-2n identity on random n x n rational matrices.
IdentityCase check_full_matrices(std::size_t n, std::size_t trials, std::uint64_t seed);
/// Default bound on the number of matrix-unit subsets visited.
inline constexpr std::size_t kMatrixUnitSubsetLimit = 20000;

/// Degree-2n identity over every 2n-subset of the n x n matrix units. Throws
/// BudgetError when C(n^2, 2n) exceeds `limit`.
IdentityCase check_matrix_units(std::size_t n, std::size_t limit = kMatrixUnitSubsetLimit);
/// Degree-(2n-2) identity on random n x n skew-symmetric matrices (n even);
/// degree 2 for n = 2.
IdentityCase check_skew(std::size_t n, std::size_t trials, std::uint64_t seed);
/// Degree-2 epsilon identity on images of random Lie elements.
IdentityCase check_representation(const LieAlgebra& g, const MatrixRep& rep, const std::string& name,
                                  std::size_t trials, std::uint64_t seed);

/// Which family of checks to run.
enum class StandardTheorem { FullMatrices, SkewMatrices, Representation };

struct StandardConfig {
  StandardTheorem theorem = StandardTheorem::FullMatrices;
  /// Matrix sizes for the full and skew families.
  std::vector<std::size_t> sizes;
  /// Algebra and representation for the representation family.
  const LieAlgebra* algebra = nullptr;
  const MatrixRep* rep = nullptr;
  std::string rep_name;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

StandardReport verify_standard_theorems(const StandardConfig& config);

}  // namespace sheetcalc
