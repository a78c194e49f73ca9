#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sheetcalc/chevalley.hpp"
#include "sheetcalc/exterior.hpp"
#include "sheetcalc/rootdata.hpp"

namespace sheetcalc {

/// Upward-closed set of positive roots.
struct RootIdeal {
  /// Indices into positive_roots, ascending.
  std::vector<std::size_t> roots;
  /// Sum of the members over the simple roots.
  Root weight;
  /// No two members sum to a root.
  bool abelian = false;

  friend bool operator==(const RootIdeal&, const RootIdeal&) = default;
};

/// phi in S and phi + alpha_i a positive root imply phi + alpha_i in S.
bool is_upward_closed(const RootSystem& rs, const std::vector<std::size_t>& roots);
bool is_abelian(const RootSystem& rs, const std::vector<std::size_t>& roots);
RootIdeal make_ideal(const RootSystem& rs, std::vector<std::size_t> roots);

/// All ideals of cardinality k, ordered lexicographically by their index
/// lists read from the highest root down.
std::vector<RootIdeal> enumerate_ideals(const RootSystem& rs, std::size_t k);

/// <lambda, alpha_i^vee> >= 0 for all i.
bool is_dominant(const RootSystem& rs, const Root& lambda);

/// (lambda, lambda + 2 rho) for the form induced by the Killing form of g.
/// Throws ConfigError when lambda is not dominant.
Rational casimir_eigenvalue(const LieAlgebra& g, const Root& lambda);

/// Weyl dimension formula, from the root-system form alone.
Integer weyl_dimension(const RootSystem& rs, const Root& lambda);

/// Number of partitions of m, by Euler's pentagonal recurrence.
Integer partition_count(std::size_t m);

struct IdealReport {
  std::vector<RootIdeal> ideals;
  std::vector<Rational> eigenvalues;
  bool all_abelian = false;
  bool weights_distinct = false;
  bool weights_dominant = false;
  bool eigenvalues_equal_rank = false;
  /// Casimir value at the highest root.
  Rational theta_value;
  /// Type A only: number of ideals against the partition number of the rank.
  std::optional<Integer> partition_number;

  bool passed() const;
};

/// Checks the size-rank ideals: abelian, distinct dominant weights, Casimir
/// value equal to the rank, and the partition count in type A.
IdealReport verify_ideal_theorems(const LieAlgebra& g);

/// Casimir sum_{a,b} Ginv_ab rho(Y_a) rho(Y_b) applied to u, with rho the
/// derivation extension of ad to the exterior algebra.
ExtElement casimir_apply(const LieAlgebra& g, const ExtElement& u);

/// Default bound on C(n, k) for casimir_on_wedge.
inline constexpr std::size_t kDefaultCasimirBudget = 5000;

struct WedgeCasimirReport {
  std::size_t k = 0;
  /// C(n, k)
  std::size_t dim = 0;
  /// Columns of the Casimir matrix on basis wedges in LabelSet order.
  std::vector<LabelSet> basis;
  std::vector<ExtElement> columns;
  /// Exact dimension of ker(Cas - k).
  std::size_t top_eigenspace_dim = 0;
  /// Largest real part of a numeric eigenvalue; unset above the numeric size limit.
  std::optional<double> max_numeric_eigenvalue;
  /// Ideals of size k that are abelian, and whether e_Phi lies in the kernel.
  std::vector<RootIdeal> abelian_ideals;
  std::vector<bool> ideal_in_kernel;

  /// max_numeric_eigenvalue <= k + 1e-9 (true when not computed).
  bool numeric_bound_ok() const;
};

/// Largest wedge dimension for which the numeric spectrum is computed.
inline constexpr std::size_t kNumericSpectrumLimit = 500;

/// Throws BudgetError when C(n, k) > budget.
WedgeCasimirReport casimir_on_wedge(const LieAlgebra& g, std::size_t k, std::size_t budget = kDefaultCasimirBudget);

/// e_Phi: wedge of the root vectors of Phi in increasing index order.
ExtElement ideal_wedge(const LieAlgebra& g, const RootIdeal& ideal);

}  // namespace sheetcalc
