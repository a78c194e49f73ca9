#include "sheetcalc/borelideals.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <map>
#include <set>

#include "sheetcalc/errors.hpp"
#include "sheetcalc/linalg.hpp"

namespace sheetcalc {

namespace {

void extend_ideals(const RootSystem& rs, std::size_t k, int idx, std::vector<bool>& in, std::size_t count,
                   std::vector<RootIdeal>& out) {
  if (count == k) {
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < in.size(); ++i)
      if (in[i]) roots.push_back(i);
    out.push_back(make_ideal(rs, std::move(roots)));
    return;
  }
  if (idx < 0 || static_cast<std::size_t>(idx) + 1 < k - count) return;
  const auto i = static_cast<std::size_t>(idx);
  bool allowed = true;
  for (std::size_t s = 0; s < rs.rank() && allowed; ++s)
    if (auto up = rs.sum_index(i, s); up && !in[*up]) allowed = false;
  if (allowed) {
    in[i] = true;
    extend_ideals(rs, k, idx - 1, in, count + 1, out);
    in[i] = false;
  }
  extend_ideals(rs, k, idx - 1, in, count, out);
}

// rho(Y_a) on a basis wedge: replace each factor by its bracket with Y_a.
void add_derivation(const LieAlgebra& g, std::size_t a, const LabelSet& s, const Rational& coeff, ExtElement& out) {
  const auto members = s.members();
  for (std::size_t p = 0; p < members.size(); ++p) {
    LabelSet rest = s;
    rest.reset(members[p]);
    for (const auto& [c, v] : g.structure(a, members[p])) {
      if (rest.test(c)) continue;
      LabelSet single;
      single.set(c);
      const int sign = merge_sign(single, rest) * ((p % 2 == 0) ? 1 : -1);
      Rational t = coeff * v;
      if (sign < 0) t = -t;
      out.add_term(rest | single, t);
    }
  }
}

ExtElement derivation(const LieAlgebra& g, std::size_t a, const ExtElement& u) {
  ExtElement out(u.dim());
  for (const auto& [s, c] : u.terms()) add_derivation(g, a, s, c, out);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::vector<Rational> coroot_values(const RootSystem& rs, const Root& lambda) {
  std::vector<Rational> v(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) v[i] = rs.coroot_pairing(lambda, i);
  return v;
}

}  // namespace

bool is_upward_closed(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::set<std::size_t> in(roots.begin(), roots.end());
  for (auto i : roots)
    for (std::size_t j = 0; j < rs.num_positive(); ++j)
      if (auto up = rs.sum_index(i, j); up && !in.count(*up)) return false;
  return true;
}

bool is_abelian(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  for (std::size_t x = 0; x < roots.size(); ++x)
    for (std::size_t y = x; y < roots.size(); ++y)
      if (rs.sum_index(roots[x], roots[y])) return false;
  return true;
}

RootIdeal make_ideal(const RootSystem& rs, std::vector<std::size_t> roots) {
  std::sort(roots.begin(), roots.end());
  RootIdeal ideal;
  ideal.weight.assign(rs.rank(), 0);
  for (auto i : roots) ideal.weight = ideal.weight + rs.positive_root(i);
  ideal.abelian = is_abelian(rs, roots);
  ideal.roots = std::move(roots);
  return ideal;
}

std::vector<RootIdeal> enumerate_ideals(const RootSystem& rs, std::size_t k) {
  std::vector<RootIdeal> out;
  if (k > rs.num_positive()) return out;
  std::vector<bool> in(rs.num_positive(), false);
  extend_ideals(rs, k, static_cast<int>(rs.num_positive()) - 1, in, 0, out);
  return out;
}

bool is_dominant(const RootSystem& rs, const Root& lambda) {
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (rs.coroot_pairing(lambda, i) < 0) return false;
  return true;
}

Rational casimir_eigenvalue(const LieAlgebra& g, const Root& lambda) {
  const RootSystem& rs = g.roots();
  if (lambda.size() != rs.rank()) throw DimensionError("weight has the wrong length");
  if (!is_dominant(rs, lambda)) throw ConfigError("casimir_eigenvalue: weight " + to_string(lambda) + " is not dominant");
  const std::size_t l = rs.rank();
  Matrix gh(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) gh(i, j) = g.killing()(g.cartan_index(i), g.cartan_index(j));
  const Matrix ghinv = inverse(gh);
  const auto v = coroot_values(rs, lambda);
  auto w = coroot_values(rs, rs.two_rho());
  for (std::size_t i = 0; i < l; ++i) w[i] += v[i];
  const auto t = ghinv.apply(w);
  Rational value = 0;
  for (std::size_t i = 0; i < l; ++i) value += v[i] * t[i];
  return value;
}

Integer weyl_dimension(const RootSystem& rs, const Root& lambda) {
  const Root two_rho = rs.two_rho();
  Root shifted = two_rho;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += 2 * lambda[i];
  Rational d = 1;
  for (const auto& phi : rs.positive_roots()) d *= rs.form(shifted, phi) / rs.form(two_rho, phi);
  if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return d.get_num();
}

Integer partition_count(std::size_t m) {
  std::vector<Integer> p(m + 1, 0);
  p[0] = 1;
  for (std::size_t n = 1; n <= m; ++n) {
    Integer total = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      Integer term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2 == 1)
        total += term;
      else
        total -= term;
    }
    p[n] = total;
  }
  return p[m];
}

bool IdealReport::passed() const {
  const bool partitions_ok = !partition_number || *partition_number == Integer(ideals.size());
  return all_abelian && weights_distinct && weights_dominant && eigenvalues_equal_rank && theta_value == 1 &&
         partitions_ok;
}

IdealReport verify_ideal_theorems(const LieAlgebra& g) {
  const RootSystem& rs = g.roots();
  const std::size_t l = rs.rank();
  IdealReport report;
  report.ideals = enumerate_ideals(rs, l);
  report.theta_value = casimir_eigenvalue(g, rs.positive_root(rs.highest_root()));
  report.all_abelian = std::all_of(report.ideals.begin(), report.ideals.end(), [](const RootIdeal& i) { return i.abelian; });
  std::set<Root> weights;
  for (const auto& i : report.ideals) weights.insert(i.weight);
  report.weights_distinct = weights.size() == report.ideals.size();
  report.weights_dominant = std::all_of(report.ideals.begin(), report.ideals.end(),
                                        [&](const RootIdeal& i) { return is_dominant(rs, i.weight); });
  report.eigenvalues_equal_rank = report.weights_dominant;
  if (report.weights_dominant) {
    for (const auto& i : report.ideals) {
      report.eigenvalues.push_back(casimir_eigenvalue(g, i.weight));
      if (report.eigenvalues.back() != Rational(static_cast<long>(l))) report.eigenvalues_equal_rank = false;
    }
  }
  if (rs.type().family == Family::A) report.partition_number = partition_count(l);
  return report;
}

ExtElement casimir_apply(const LieAlgebra& g, const ExtElement& u) {
  const std::size_t n = g.dim();
  if (u.dim() != n) throw DimensionError("casimir_apply: dimension mismatch");
  const Matrix& inv = g.killing_inverse();
  ExtElement out(n);
  for (std::size_t b = 0; b < n; ++b) {
    bool any = false;
    for (std::size_t a = 0; a < n && !any; ++a) any = inv(a, b) != 0;
    if (!any) continue;
    const ExtElement rb = derivation(g, b, u);
    if (rb.is_zero()) continue;
    for (std::size_t a = 0; a < n; ++a) {
      if (inv(a, b) == 0) continue;
      out += inv(a, b) * derivation(g, a, rb);
    }
  }
  return out;
}

bool WedgeCasimirReport::numeric_bound_ok() const {
  return !max_numeric_eigenvalue || *max_numeric_eigenvalue <= static_cast<double>(k) + 1e-9;
}

ExtElement ideal_wedge(const LieAlgebra& g, const RootIdeal& ideal) {
  std::vector<std::size_t> labels;
  for (auto i : ideal.roots) labels.push_back(g.positive_index(i));
  return ExtElement::basis_wedge(g.dim(), labels);
}

WedgeCasimirReport casimir_on_wedge(const LieAlgebra& g, std::size_t k, std::size_t budget) {
  const std::size_t n = g.dim();
  WedgeCasimirReport report;
  report.k = k;
  report.dim = binomial(n, k);
  if (report.dim > budget)
    throw BudgetError("casimir_on_wedge: C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
                      std::to_string(report.dim) + " exceeds the budget of " + std::to_string(budget));
  if (k > n) return report;

  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    report.basis.push_back(LabelSet::of(pick));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(report.basis.begin(), report.basis.end());

  SparseEchelon<LabelSet> shifted;
  const Rational kk(static_cast<long>(k));
  for (const auto& s : report.basis) {
    ExtElement w(n);
    w.add_term(s, 1);
    ExtElement col = casimir_apply(g, w);
    SparseEchelon<LabelSet>::Vector v(col.terms().begin(), col.terms().end());
    auto [it, inserted] = v.try_emplace(s, 0);
    it->second -= kk;
    if (it->second == 0) v.erase(it);
    shifted.insert(std::move(v));
    report.columns.push_back(std::move(col));
  }
  report.top_eigenspace_dim = report.dim - shifted.dim();

  if (report.dim > 0 && report.dim <= kNumericSpectrumLimit) {
    std::map<LabelSet, std::size_t> index;
    for (std::size_t i = 0; i < report.basis.size(); ++i) index.emplace(report.basis[i], i);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(report.dim), static_cast<Eigen::Index>(report.dim));
    for (std::size_t c = 0; c < report.columns.size(); ++c)
      for (const auto& [s, v] : report.columns[c].terms())
        m(static_cast<Eigen::Index>(index.at(s)), static_cast<Eigen::Index>(c)) = v.get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    report.max_numeric_eigenvalue = solver.eigenvalues().real().maxCoeff();
  }

  for (auto& ideal : enumerate_ideals(g.roots(), k)) {
    if (!ideal.abelian) continue;
    const ExtElement e = ideal_wedge(g, ideal);
    report.ideal_in_kernel.push_back(casimir_apply(g, e) == kk * e);
    report.abelian_ideals.push_back(std::move(ideal));
  }
  return report;
}

}  // namespace sheetcalc
