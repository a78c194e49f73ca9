#include "sheetcalc/gammamap.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include "sheetcalc/errors.hpp"

namespace sheetcalc {

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void extend_matchings(std::vector<bool>& used, Matching& current, const std::function<void(const Matching&)>& visit) {
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) {
    std::vector<std::size_t> perm;
    perm.reserve(used.size());
    for (const auto& [a, b] : current.pairs) {
      perm.push_back(a);
      perm.push_back(b);
    }
    current.sign = permutation_sign(perm);
    visit(current);
    return;
  }
  used[first] = true;
  for (std::size_t partner = first + 1; partner < used.size(); ++partner) {
    if (used[partner]) continue;
    used[partner] = true;
    current.pairs.emplace_back(first, partner);
    extend_matchings(used, current, visit);
    current.pairs.pop_back();
    used[partner] = false;
  }
  used[first] = false;
}

// Pfaffian of the skew matrix A(i, j) over the index subset `mask`, expanded
// along the lowest index and memoised by subset.
class PfaffianExpansion {
 public:
  PfaffianExpansion(std::size_t size, std::size_t nvars, std::function<const Poly&(std::size_t, std::size_t)> entry)
      : size_(size), nvars_(nvars), entry_(std::move(entry)) {}

  Poly full() { return eval(size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1); }

 private:
  Poly eval(std::uint64_t mask) {
    if (mask == 0) return Poly::constant(nvars_, 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const auto first = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
    Poly total(nvars_);
    int sign = 1;
    for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(bits));
      const Poly& a = entry_(first, j);
      if (!a.is_zero()) {
        const Poly sub = eval(rest & ~(std::uint64_t{1} << j));
        if (!sub.is_zero()) {
          if (sign > 0)
            total += a * sub;
          else
            total -= a * sub;
        }
      }
      sign = -sign;
    }
    memo_.emplace(mask, total);
    return total;
  }

  std::size_t size_;
  std::size_t nvars_;
  std::function<const Poly&(std::size_t, std::size_t)> entry_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

std::vector<Matching> enumerate_matchings(std::size_t k) {
  std::vector<Matching> out;
  out.reserve(double_factorial_odd(k));
  for_each_matching(k, [&](const Matching& m) { out.push_back(m); });
  return out;
}

void for_each_matching(std::size_t k, const std::function<void(const Matching&)>& visit) {
  std::vector<bool> used(2 * k, false);
  Matching current;
  extend_matchings(used, current, visit);
}

std::size_t double_factorial_odd(std::size_t k) {
  std::size_t v = 1;
  for (std::size_t i = 1; i <= k; ++i) v *= 2 * i - 1;
  return v;
}

Poly gamma_map(const LieAlgebra& g, std::span<const LieElement> xs) {
  if (xs.size() % 2 != 0) throw DimensionError("gamma_map needs an even number of arguments");
  if (xs.size() > 64) throw BudgetError("gamma_map supports at most 64 arguments");
  const std::size_t m = xs.size();
  const std::size_t n = g.dim();
  const Matrix& gram = g.killing();
  std::vector<Poly> forms(m * m, Poly(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const LieElement z = g.bracket(xs[i], xs[j]);
      forms[i * m + j] = Poly::linear(gram.apply(z.coords));
    }
  }
  PfaffianExpansion pf(m, n, [&](std::size_t i, std::size_t j) -> const Poly& { return forms[i * m + j]; });
  return pf.full();
}

GammaMap::GammaMap(const LieAlgebra& g) : g_(&g), n_(g.dim()), forms_(n_ * n_, Poly(n_)) {
  const Matrix& gram = g.killing();
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      const auto& s = g.structure(a, b);
      if (s.empty()) continue;
      std::vector<Rational> coeffs(n_);
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& [c, v] : s) coeffs[j] += v * gram(c, j);
      forms_[a * n_ + b] = Poly::linear(coeffs);
    }
  }
}

Poly GammaMap::on_basis(std::span<const std::size_t> labels) const {
  if (labels.size() % 2 != 0) throw DimensionError("gamma_map needs an even number of arguments");
  if (labels.size() > 64) throw BudgetError("gamma_map supports at most 64 arguments");
  for (auto a : labels)
    if (a >= n_) throw DimensionError("basis label out of range");
  PfaffianExpansion pf(labels.size(), n_, [&](std::size_t i, std::size_t j) -> const Poly& {
    return bracket_form(labels[i], labels[j]);
  });
  return pf.full();
}

PolySpace rk_space(const LieAlgebra& g, std::size_t k, std::size_t budget) {
  const std::size_t n = g.dim();
  PolySpace space(n);
  if (2 * k > n) return space;
  const std::size_t count = binomial(n, 2 * k);
  if (count > budget)
    throw BudgetError("rk_space: " + std::to_string(count) + " basis wedges exceed the budget of " +
                      std::to_string(budget));
  const GammaMap gm(g);
  std::vector<std::size_t> labels(2 * k);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
  for (;;) {
    space.insert(gm.on_basis(labels));
    // next combination in lexicographic order
    std::size_t i = labels.size();
    while (i > 0 && labels[i - 1] == n - labels.size() + i - 1) --i;
    if (i == 0) break;
    ++labels[i - 1];
    for (std::size_t j = i; j < labels.size(); ++j) labels[j] = labels[j - 1] + 1;
  }
  return space;
}

VarietyReport variety_check(const LieAlgebra& g, std::size_t k, const PolySpace& space,
                            std::span<const LieElement> samples) {
  VarietyReport report;
  report.k = k;
  const auto basis = space.basis();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const LieElement& x = samples[s];
    const std::size_t od = g.orbit_dim(x);
    bool vanishes = true;
    for (const auto& p : basis) {
      if (p.evaluate(x.coords) != 0) {
        vanishes = false;
        break;
      }
    }
    ++report.samples;
    if (vanishes)
      ++report.vanishing;
    else
      ++report.nonvanishing;
    const bool expect_vanishing = od < 2 * k;
    if (vanishes != expect_vanishing) report.violations.push_back({s, od, expect_vanishing});
  }
  return report;
}

}  // namespace sheetcalc
