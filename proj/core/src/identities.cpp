#include "sheetcalc/identities.hpp"

#include <algorithm>

#include "sheetcalc/errors.hpp"
#include "sheetcalc/random.hpp"

namespace sheetcalc {

namespace {

struct PermutationTree {
  std::span<const Matrix> xs;
  std::vector<bool> used;
  Matrix sum;

  void descend(const Matrix& prefix, std::size_t depth, int sign) {
    const std::size_t k = xs.size();
    std::size_t smaller_unused = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (used[i]) continue;
      // choosing i places it before every unused index below it
      const int s = (smaller_unused % 2 == 0) ? sign : -sign;
      ++smaller_unused;
      if (depth + 1 == k) {
        Matrix leaf = prefix * xs[i];
        if (s > 0)
          sum += leaf;
        else
          sum -= leaf;
        continue;
      }
      used[i] = true;
      descend(prefix * xs[i], depth + 1, s);
      used[i] = false;
    }
  }
};

Matrix random_matrix(std::size_t n, SplitMix64& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.small_rational();
  return m;
}

Matrix random_skew(std::size_t n, SplitMix64& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = rng.small_rational();
      m(j, i) = -m(i, j);
    }
  return m;
}

// Runs the identity of `degree` on each tuple and records the witness search
// on the first degree - 1 entries.
template <class Draw>
void run_trials(IdentityCase& c, Draw draw) {
  for (std::size_t t = 0; t < c.trials; ++t) {
    std::vector<Matrix> xs;
    xs.reserve(c.degree);
    for (std::size_t i = 0; i < c.degree; ++i) xs.push_back(draw());
    if (!std_identity(xs).is_zero()) ++c.failures;
    if (!c.lower_degree_witness && c.degree > 1) {
      const std::span<const Matrix> head(xs.data(), c.degree - 1);
      if (!std_identity(head).is_zero()) c.lower_degree_witness = true;
    }
  }
}

std::size_t check_identity_args(std::span<const Matrix> xs) {
  if (xs.empty()) throw DimensionError("std_identity needs at least one matrix");
  if (xs.size() > kMaxIdentityDegree)
    throw BudgetError("std_identity: degree " + std::to_string(xs.size()) + " exceeds the limit of " +
                      std::to_string(kMaxIdentityDegree));
  const std::size_t n = xs.front().rows();
  for (const auto& x : xs)
    if (x.rows() != n || x.cols() != n) throw DimensionError("std_identity: matrices of different shapes");
  return n;
}

}  // namespace

Matrix std_identity(std::span<const Matrix> xs) {
  const std::size_t n = check_identity_args(xs);
  const std::size_t k = xs.size();
  // Clear denominators per factor; the identity is multilinear.
  Integer scale = 1;
  std::vector<std::vector<Integer>> ints(k, std::vector<Integer>(n * n));
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Rational> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) entries.push_back(xs[t](i, j));
    const Integer d = common_denominator(entries);
    scale *= d;
    for (std::size_t e = 0; e < n * n; ++e) ints[t][e] = entries[e].get_num() * (d / entries[e].get_den());
  }
  // table[mask] = alternating sum over orderings of the factors in mask
  std::vector<std::vector<Integer>> table(std::size_t{1} << k);
  table[0].assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) table[0][i * n + i] = 1;
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    std::vector<Integer> sum(n * n, 0);
    bool any = false;
    std::size_t below = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if (!(mask >> t & 1U)) continue;
      const auto& rest = table[mask & ~(std::size_t{1} << t)];
      const bool negative = below % 2 == 1;
      ++below;
      if (rest.empty()) continue;
      const auto& x = ints[t];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
          const Integer& a = x[i * n + l];
          if (a == 0) continue;
          if (negative) {
            for (std::size_t j = 0; j < n; ++j) mpz_submul(sum[i * n + j].get_mpz_t(), a.get_mpz_t(), rest[l * n + j].get_mpz_t());
          } else {
            for (std::size_t j = 0; j < n; ++j) mpz_addmul(sum[i * n + j].get_mpz_t(), a.get_mpz_t(), rest[l * n + j].get_mpz_t());
          }
          any = true;
        }
    }
    if (any && std::any_of(sum.begin(), sum.end(), [](const Integer& v) { return v != 0; })) table[mask] = std::move(sum);
  }
  Matrix out(n, n);
  const auto& full = table.back();
  if (full.empty()) return out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = Rational(full[i * n + j], scale);
      out(i, j).canonicalize();
    }
  return out;
}

Matrix std_identity_tree(std::span<const Matrix> xs) {
  const std::size_t n = check_identity_args(xs);
  PermutationTree tree{xs, std::vector<bool>(xs.size(), false), Matrix(n, n)};
  tree.descend(Matrix::identity(n), 0, 1);
  return tree.sum;
}

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw DimensionError("matrix unit index out of range");
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

std::size_t nilpotency_index(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("nilpotency_index needs a square matrix");
  if (m.is_zero()) return 1;
  Matrix p = m;
  for (std::size_t k = 2; k <= m.rows(); ++k) {
    p = p * m;
    if (p.is_zero()) return k;
  }
  return 0;
}

std::size_t epsilon(const MatrixRep& rep, const LieAlgebra& g) {
  const std::size_t regular = nilpotency_index(rep.image(g.regular_nilpotent()));
  if (regular == 0) throw RepresentationError("image of the regular nilpotent is not nilpotent");
  for (std::size_t k = 0; k < g.num_positive(); ++k) {
    for (std::size_t a : {g.positive_index(k), g.negative_index(k)}) {
      const std::size_t idx = nilpotency_index(rep.mats[a]);
      if (idx == 0) throw RepresentationError("image of " + g.label(a) + " is not nilpotent");
      if (idx > regular)
        throw RepresentationError("root vector " + g.label(a) + " exceeds the regular nilpotency index");
    }
  }
  return regular;
}

bool StandardReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const IdentityCase& c) { return c.failures == 0; });
}

IdentityCase check_full_matrices(std::size_t n, std::size_t trials, std::uint64_t seed) {
  IdentityCase c{"full M(" + std::to_string(n) + ")", n, 2 * n, trials, 0, false};
  SplitMix64 rng(seed);
  run_trials(c, [&] { return random_matrix(n, rng); });
  return c;
}

IdentityCase check_matrix_units(std::size_t n, std::size_t limit) {
  IdentityCase c{"matrix units M(" + std::to_string(n) + ")", n, 2 * n, 0, 0, false};
  const std::size_t m = n * n, k = 2 * n;
  if (k > m) return c;
  std::size_t count = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    count = count * (m - k + i) / i;
    if (count > limit)
      throw BudgetError("matrix-unit sweep for M(" + std::to_string(n) + ") exceeds " + std::to_string(limit) +
                        " subsets");
  }
  std::vector<Matrix> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) units.push_back(matrix_unit(n, i, j));
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::vector<Matrix> xs;
    for (auto i : pick) xs.push_back(units[i]);
    ++c.trials;
    if (!std_identity(xs).is_zero()) ++c.failures;
    if (!c.lower_degree_witness && !std_identity(std::span<const Matrix>(xs.data(), k - 1)).is_zero())
      c.lower_degree_witness = true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return c;
}

IdentityCase check_skew(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw DimensionError("check_skew needs an even size >= 2");
  IdentityCase c{"skew " + std::to_string(n) + "x" + std::to_string(n), n, 2 * n - 2, trials, 0, false};
  SplitMix64 rng(seed);
  run_trials(c, [&] { return random_skew(n, rng); });
  return c;
}

IdentityCase check_representation(const LieAlgebra& g, const MatrixRep& rep, const std::string& name,
                                  std::size_t trials, std::uint64_t seed) {
  const std::size_t eps = epsilon(rep, g);
  IdentityCase c{name, rep.dim, 2 * eps, trials, 0, false};
  SplitMix64 rng(seed);
  run_trials(c, [&] {
    LieElement x(g.dim());
    for (auto& v : x.coords) v = rng.small_rational();
    return rep.image(x);
  });
  return c;
}

StandardReport verify_standard_theorems(const StandardConfig& config) {
  StandardReport report;
  switch (config.theorem) {
    case StandardTheorem::FullMatrices:
      for (std::size_t i = 0; i < config.sizes.size(); ++i) {
        const std::size_t n = config.sizes[i];
        report.cases.push_back(check_matrix_units(n));
        report.cases.push_back(check_full_matrices(n, config.trials, config.seed + i));
      }
      break;
    case StandardTheorem::SkewMatrices:
      for (std::size_t i = 0; i < config.sizes.size(); ++i)
        report.cases.push_back(check_skew(config.sizes[i], config.trials, config.seed + i));
      break;
    case StandardTheorem::Representation:
      if (config.algebra == nullptr || config.rep == nullptr)
        throw ConfigError("representation check needs an algebra and a representation");
      report.cases.push_back(
          check_representation(*config.algebra, *config.rep, config.rep_name, config.trials, config.seed));
      break;
  }
  return report;
}

}  // namespace sheetcalc
