#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sheetcalc/rational.hpp"

namespace sheetcalc {

enum class Family { A, B, C, D };

/// Classical Cartan type: family and rank.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A2", "b3", "D4" (case-insensitive). Throws ConfigError.
  static CartanType parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Coefficients of a root over the simple roots.
using Root = std::vector<int>;

/// Rank bound for construction. The default honours SHEETCALC_MAX_RANK when
/// set, otherwise 6.
struct RootSystemOptions {
  int max_rank = default_max_rank();
  /// D2 (so4) and D3 (so6) are accepted only when this is set.
  bool allow_low_rank_d = false;

  static int default_max_rank();
};

/// Root system of a classical type with a fixed total order on the positive
/// roots: by height, ties broken lexicographically on coefficients.
///
/// The Cartan matrix uses the convention cartan(i, j) = <alpha_j, alpha_i^vee>,
/// i.e. the eigenvalue of ad h_i on e_{alpha_j}.
class RootSystem {
 public:
  const CartanType& type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  /// Number of positive roots.
  std::size_t num_positive() const { return positive_.size(); }
  /// Dimension of the Lie algebra: rank + 2 * num_positive.
  std::size_t dim() const { return rank() + 2 * num_positive(); }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& positive_root(std::size_t i) const { return positive_[i]; }
  std::vector<Root> simple_roots() const;
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// Index of phi_i + phi_j among the positive roots, if it is a root.
  std::optional<std::size_t> sum_index(std::size_t i, std::size_t j) const { return sum_table_[i][j]; }
  std::optional<std::size_t> index_of(const Root& r) const;
  bool is_root(const Root& r) const;

  int height(std::size_t i) const;
  std::size_t highest_root() const { return positive_.size() - 1; }

  /// Exponents m_i in ascending order, from the height distribution of the
  /// positive roots.
  const std::vector<int>& exponents() const { return exponents_; }

  /// <beta, alpha_i^vee>.
  int coroot_pairing(const Root& beta, std::size_t i) const;
  /// Coefficients of phi^vee over the simple coroots.
  Root coroot(const Root& phi) const;
  /// W-invariant form on the root lattice from the symmetrised Cartan
  /// matrix; simple roots of the shortest length have squared length 2.
  Rational form(const Root& a, const Root& b) const;
  /// Sum of the positive roots (2 rho) over the simple roots.
  Root two_rho() const;

 private:
  friend RootSystem build_root_system(const CartanType& t, const RootSystemOptions& opts);

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> half_length_;  // (alpha_i, alpha_i) / 2
  std::vector<Root> positive_;
  std::vector<std::vector<std::optional<std::size_t>>> sum_table_;
  std::vector<int> exponents_;
};

/// Builds the root system by reflection closure from the simple roots.
/// Throws ConfigError for an unsupported family/rank naming the bound.
RootSystem build_root_system(const CartanType& t, const RootSystemOptions& opts = {});

/// Exponents of the type, ascending.
std::vector<int> exponents(const CartanType& t, const RootSystemOptions& opts = {});

/// Closed-form count of positive roots per family.
std::size_t positive_root_count(const CartanType& t);

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
std::string to_string(const Root& r);

}  // namespace sheetcalc
