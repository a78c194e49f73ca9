#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "sheetcalc/errors.hpp"
#include "sheetcalc/identities.hpp"
#include "support.hpp"

namespace sheetcalc {
namespace {

using testing::algebra;
using testing::random_matrix;
using testing::random_rational;
using testing::random_skew;
using testing::seeds;

// Plain sum over all k! permutations.
Matrix permutation_oracle(const std::vector<Matrix>& xs) {
  std::vector<std::size_t> perm(xs.size());
  std::iota(perm.begin(), perm.end(), 0);
  Matrix total(xs[0].rows(), xs[0].cols());
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    Matrix prod = xs[perm[0]];
    for (std::size_t i = 1; i < perm.size(); ++i) prod = prod * xs[perm[i]];
    total += (inv % 2 ? Rational(-1) : Rational(1)) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(StdIdentity, CommutingPairVanishes) {
  SplitMix64 rng(1);
  const Matrix a = random_matrix(3, rng);
  const std::vector<Matrix> xs{a, a * a};
  EXPECT_TRUE(std_identity(xs).is_zero());
}

TEST(StdIdentity, MatrixUnitsOfMTwo) {
  const std::vector<Matrix> units{matrix_unit(2, 0, 0), matrix_unit(2, 0, 1), matrix_unit(2, 1, 0),
                                  matrix_unit(2, 1, 1)};
  EXPECT_TRUE(std_identity(units).is_zero());

  const std::vector<Matrix> three{units[0], units[1], units[2]};
  const Matrix expected = Rational(2) * matrix_unit(2, 0, 0) + matrix_unit(2, 1, 1);
  EXPECT_EQ(permutation_oracle(three), expected);
  EXPECT_EQ(std_identity(three), expected);
  EXPECT_EQ(std_identity_tree(three), expected);
}

TEST(StdIdentity, Errors) {
  std::vector<Matrix> many(kMaxIdentityDegree + 1, Matrix::identity(2));
  EXPECT_THROW(std_identity(many), BudgetError);
  EXPECT_THROW(std_identity_tree(many), BudgetError);
  const std::vector<Matrix> mixed{Matrix::identity(2), Matrix::identity(3)};
  EXPECT_THROW(std_identity(mixed), DimensionError);
  EXPECT_THROW(std_identity(std::vector<Matrix>{}), DimensionError);
}

TEST(StdIdentity, AgreesWithOracleAndTree) {
  for (auto seed : seeds(20)) {
    SplitMix64 rng(seed);
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<Matrix> xs;
    for (std::size_t i = 0; i < k; ++i) xs.push_back(random_matrix(n, rng));
    const Matrix oracle = permutation_oracle(xs);
    EXPECT_EQ(std_identity(xs), oracle);
    EXPECT_EQ(std_identity_tree(xs), oracle);
  }
}

TEST(StdIdentity, MultilinearAndAlternating) {
  for (auto seed : seeds(50)) {
    SplitMix64 rng(seed);
    const std::size_t k = static_cast<std::size_t>(rng.uniform(2, 5));
    std::vector<Matrix> xs;
    for (std::size_t i = 0; i < k; ++i) xs.push_back(random_matrix(3, rng));
    const Matrix base = std_identity(xs);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 2));
    if (j >= i) ++j;

    auto swapped = xs;
    std::swap(swapped[i], swapped[j]);
    EXPECT_EQ(std_identity(swapped), Rational(-1) * base);

    auto repeated = xs;
    repeated[j] = repeated[i];
    EXPECT_TRUE(std_identity(repeated).is_zero());

    const Matrix z = random_matrix(3, rng);
    const Rational c = random_rational(rng);
    auto combined = xs, replaced = xs;
    combined[i] = xs[i] + c * z;
    replaced[i] = z;
    EXPECT_EQ(std_identity(combined), base + c * std_identity(replaced));
  }
}

TEST(StandardTheorems, FullMatrices) {
  for (std::size_t n : {1, 2, 3}) {
    const IdentityCase c = check_full_matrices(n, 100, 5);
    EXPECT_EQ(c.degree, 2 * n);
    EXPECT_EQ(c.trials, 100U);
    EXPECT_EQ(c.failures, 0U) << n;
    if (n > 1) EXPECT_TRUE(c.lower_degree_witness) << n;
  }
}

TEST(StandardTheorems, MatrixUnitsExhaustive) {
  const IdentityCase two = check_matrix_units(2);
  EXPECT_EQ(two.trials, 1U);  // C(4, 4)
  EXPECT_EQ(two.failures, 0U);
  EXPECT_TRUE(two.lower_degree_witness);
  const IdentityCase three = check_matrix_units(3);
  EXPECT_EQ(three.trials, 84U);  // C(9, 6)
  EXPECT_EQ(three.failures, 0U);
  EXPECT_THROW(check_matrix_units(4, 100), BudgetError);
}

TEST(StandardTheorems, SkewMatrices) {
  const IdentityCase two = check_skew(2, 50, 1);
  EXPECT_EQ(two.degree, 2U);
  EXPECT_EQ(two.failures, 0U);
  const IdentityCase four = check_skew(4, 50, 1);
  EXPECT_EQ(four.degree, 6U);
  EXPECT_EQ(four.failures, 0U);

  // Skew matrices do not satisfy the identity one degree lower in general.
  SplitMix64 rng(4);
  bool nonzero = false;
  for (int t = 0; t < 20 && !nonzero; ++t) {
    std::vector<Matrix> xs;
    for (int i = 0; i < 5; ++i) xs.push_back(random_skew(4, rng));
    nonzero = !std_identity(xs).is_zero();
  }
  EXPECT_TRUE(nonzero);
}

TEST(Epsilon, NilpotencyIndex) {
  EXPECT_EQ(nilpotency_index(Matrix(3, 3)), 1U);
  EXPECT_EQ(nilpotency_index(matrix_unit(3, 0, 1)), 2U);
  EXPECT_EQ(nilpotency_index(matrix_unit(3, 0, 1) + matrix_unit(3, 1, 2)), 3U);
  EXPECT_EQ(nilpotency_index(Matrix::identity(2)), 0U);
}

TEST(Epsilon, ClassicalValues) {
  for (int l = 1; l <= 4; ++l) {
    const LieAlgebra g = algebra(("A" + std::to_string(l)).c_str());
    EXPECT_EQ(epsilon(defining_rep(g), g), static_cast<std::size_t>(l + 1));
  }
  for (const char* type : {"D2", "D3", "D4"}) {
    const LieAlgebra g = algebra(type, true);
    const MatrixRep def = defining_rep(g);
    EXPECT_EQ(epsilon(def, g), def.dim - 1) << type;
  }
  for (const char* type : {"B2", "B3"}) {
    const LieAlgebra g = algebra(type);
    const MatrixRep def = defining_rep(g);
    EXPECT_EQ(epsilon(def, g), def.dim) << type;
  }
  const LieAlgebra a1 = algebra("A1");
  EXPECT_EQ(epsilon(adjoint_rep(a1), a1), 3U);
}

TEST(Epsilon, BoundsEveryRootVector) {
  for (const char* type : {"A2", "B2", "C2"}) {
    const LieAlgebra g = algebra(type);
    for (const MatrixRep& rep : {defining_rep(g), adjoint_rep(g)}) {
      const std::size_t eps = epsilon(rep, g);
      for (std::size_t k = 0; k < g.num_positive(); ++k) {
        EXPECT_LE(nilpotency_index(rep.mats[g.positive_index(k)]), eps);
        EXPECT_LE(nilpotency_index(rep.mats[g.negative_index(k)]), eps);
      }
    }
  }
}

TEST(Epsilon, NonNilpotentImageThrows) {
  const LieAlgebra g = algebra("A1");
  MatrixRep bad = defining_rep(g);
  bad.mats[1] = Matrix::identity(2);
  EXPECT_THROW(epsilon(bad, g), RepresentationError);
}

TEST(StandardTheorems, RepresentationImages) {
  const LieAlgebra a2 = algebra("A2");
  const IdentityCase def = check_representation(a2, defining_rep(a2), "defining", 50, 3);
  EXPECT_EQ(def.degree, 6U);
  EXPECT_EQ(def.failures, 0U);
  const LieAlgebra d2 = algebra("D2", true);
  const IdentityCase so4 = check_representation(d2, defining_rep(d2), "so4", 50, 3);
  EXPECT_EQ(so4.degree, 6U);
  EXPECT_EQ(so4.failures, 0U);
}

TEST(StandardTheorems, ConfigDriver) {
  StandardConfig full;
  full.sizes = {2, 3};
  full.trials = 20;
  const StandardReport a = verify_standard_theorems(full);
  EXPECT_TRUE(a.passed());
  EXPECT_GE(a.cases.size(), 2U);

  StandardConfig rep;
  rep.theorem = StandardTheorem::Representation;
  EXPECT_THROW(verify_standard_theorems(rep), ConfigError);
}

}  // namespace
}  // namespace sheetcalc
