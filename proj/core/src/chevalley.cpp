#include "sheetcalc/chevalley.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "sheetcalc/errors.hpp"

namespace sheetcalc {

namespace {

// Sparse square matrix used while building the realisation.
using SparseMat = std::map<std::pair<std::size_t, std::size_t>, Rational>;

void add_entry(SparseMat& m, std::size_t i, std::size_t j, const Rational& v) {
  auto [it, inserted] = m.try_emplace({i, j}, 0);
  it->second += v;
  if (it->second == 0) m.erase(it);
}

SparseMat unit(std::size_t i, std::size_t j, const Rational& v = 1) { return {{{i, j}, v}}; }

SparseMat operator+(SparseMat a, const SparseMat& b) {
  for (const auto& [ij, v] : b) add_entry(a, ij.first, ij.second, v);
  return a;
}

SparseMat scaled(SparseMat a, const Rational& s) {
  for (auto& [ij, v] : a) v *= s;
  return a;
}

SparseMat product(const SparseMat& a, const SparseMat& b) {
  SparseMat c;
  for (const auto& [ij, x] : a) {
    auto it = b.lower_bound({ij.second, 0});
    for (; it != b.end() && it->first.first == ij.second; ++it) add_entry(c, ij.first, it->first.second, x * it->second);
  }
  return c;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) {
  return product(a, b) + scaled(product(b, a), -1);
}

struct SimpleGenerators {
  std::size_t dim = 0;
  std::vector<SparseMat> e, f;
};

// Classical realisations: sl(l+1), so(2l+1), sp(2l), so(2l), with the
// symmetric/symplectic form pairing index i with l+i (and 2l with itself in
// type B).
SimpleGenerators classical_generators(const CartanType& t) {
  const auto l = static_cast<std::size_t>(t.rank);
  SimpleGenerators g;
  auto levi_block = [&](std::size_t i) {
    g.e.push_back(unit(i, i + 1) + unit(l + i + 1, l + i, -1));
    g.f.push_back(unit(i + 1, i) + unit(l + i, l + i + 1, -1));
  };
  switch (t.family) {
    case Family::A:
      g.dim = l + 1;
      for (std::size_t i = 0; i < l; ++i) {
        g.e.push_back(unit(i, i + 1));
        g.f.push_back(unit(i + 1, i));
      }
      break;
    case Family::B:
      g.dim = 2 * l + 1;
      for (std::size_t i = 0; i + 1 < l; ++i) levi_block(i);
      g.e.push_back(unit(l - 1, 2 * l) + unit(2 * l, 2 * l - 1, -1));
      g.f.push_back(unit(2 * l, l - 1, 2) + unit(2 * l - 1, 2 * l, -2));
      break;
    case Family::C:
      g.dim = 2 * l;
      for (std::size_t i = 0; i + 1 < l; ++i) levi_block(i);
      g.e.push_back(unit(l - 1, 2 * l - 1));
      g.f.push_back(unit(2 * l - 1, l - 1));
      break;
    case Family::D:
      g.dim = 2 * l;
      for (std::size_t i = 0; i + 1 < l; ++i) levi_block(i);
      g.e.push_back(unit(l - 2, 2 * l - 1) + unit(l - 1, 2 * l - 2, -1));
      g.f.push_back(unit(2 * l - 1, l - 2) + unit(2 * l - 2, l - 1, -1));
      break;
  }
  return g;
}

Matrix to_dense(const SparseMat& m, std::size_t n) {
  Matrix d(n, n);
  for (const auto& [ij, v] : m) d(ij.first, ij.second) = v;
  return d;
}

Root negated(const Root& r) {
  Root n(r);
  for (auto& c : n) c = -c;
  return n;
}

bool is_zero_root(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

}  // namespace

bool LieElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (o.size() != size()) throw DimensionError("LieElement sum: dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  if (o.size() != size()) throw DimensionError("LieElement difference: dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

LieAlgebra build_lie_algebra(const RootSystem& rs) {
  LieAlgebra g;
  g.rs_ = rs;
  const std::size_t l = rs.rank();
  const std::size_t r = rs.num_positive();
  const std::size_t n = l + 2 * r;
  g.n_ = n;

  const auto gens = classical_generators(rs.type());
  std::vector<SparseMat> pos(r), neg(r), cartan(l);
  for (std::size_t i = 0; i < l; ++i) {
    pos[i] = gens.e[i];
    neg[i] = gens.f[i];
    cartan[i] = commutator(gens.e[i], gens.f[i]);
  }
  for (std::size_t k = l; k < r; ++k) {
    const Root& xi = rs.positive_root(k);
    std::size_t simple = l;
    std::size_t rest = 0;
    for (std::size_t i = 0; i < l; ++i) {
      Root d = xi;
      d[i] -= 1;
      if (auto idx = rs.index_of(d)) {
        simple = i;
        rest = *idx;
        break;
      }
    }
    if (simple == l) throw std::logic_error("positive root without a simple predecessor");
    int p = 0;
    for (Root d = rs.positive_root(rest);; ++p) {
      d[simple] -= 1;
      if (!rs.is_root(d)) break;
    }
    const Rational scale(1, p + 1);
    pos[k] = scaled(commutator(pos[simple], pos[rest]), scale);
    neg[k] = scaled(commutator(neg[simple], neg[rest]), -scale);
  }

  std::vector<SparseMat> basis;
  basis.reserve(n);
  g.weights_.clear();
  for (std::size_t i = 0; i < l; ++i) {
    basis.push_back(cartan[i]);
    g.weights_.push_back(Root(l, 0));
  }
  for (std::size_t k = 0; k < r; ++k) {
    basis.push_back(pos[k]);
    g.weights_.push_back(rs.positive_root(k));
  }
  for (std::size_t k = 0; k < r; ++k) {
    basis.push_back(neg[k]);
    g.weights_.push_back(negated(rs.positive_root(k)));
  }

  // Cartan part is diagonal; its coordinates solve a small system.
  Matrix diag(gens.dim, l);
  for (std::size_t i = 0; i < l; ++i)
    for (const auto& [ij, v] : cartan[i])
      if (ij.first == ij.second) diag(ij.first, i) = v;

  auto weight_index = [&](const Root& w) -> std::optional<std::size_t> {
    if (auto k = rs.index_of(w)) return g.positive_index(*k);
    if (auto k = rs.index_of(negated(w))) return g.negative_index(*k);
    return std::nullopt;
  };

  g.structure_.assign(n, std::vector<SparseVec>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const SparseMat c = commutator(basis[a], basis[b]);
      if (c.empty()) continue;
      const Root w = g.weights_[a] + g.weights_[b];
      SparseVec coords;
      SparseMat rebuilt;
      if (is_zero_root(w)) {
        std::vector<Rational> rhs(gens.dim);
        for (const auto& [ij, v] : c)
          if (ij.first == ij.second) rhs[ij.first] = v;
        auto sol = solve(diag, rhs);
        if (!sol) throw std::logic_error("commutator of opposite root vectors left the Cartan subalgebra");
        for (std::size_t i = 0; i < l; ++i) {
          if ((*sol)[i] == 0) continue;
          coords.emplace_back(i, (*sol)[i]);
          rebuilt = rebuilt + scaled(cartan[i], (*sol)[i]);
        }
      } else if (auto target = weight_index(w)) {
        const auto& [ij, v] = *basis[*target].begin();
        auto it = c.find(ij);
        const Rational coeff = (it == c.end()) ? Rational(0) : it->second / v;
        coords.emplace_back(*target, coeff);
        rebuilt = scaled(basis[*target], coeff);
      }
      if (rebuilt != c) {
        throw std::logic_error("commutator " + g.label(a) + ", " + g.label(b) + " is not in the expected weight space");
      }
      g.structure_[a][b] = coords;
      for (auto& [idx, v] : coords) v = -v;
      g.structure_[b][a] = std::move(coords);
    }
  }

  // B(Y_a, Y_b) = tr(ad Y_a ad Y_b) = sum_{c,d} [Y_a,Y_d]_c [Y_b,Y_c]_d.
  g.killing_ = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (!is_zero_root(g.weights_[a] + g.weights_[b])) continue;
      Rational t = 0;
      for (std::size_t d = 0; d < n; ++d) {
        for (const auto& [c, v] : g.structure_[a][d]) {
          for (const auto& [dd, u] : g.structure_[b][c])
            if (dd == d) t += v * u;
        }
      }
      g.killing_(a, b) = t;
      g.killing_(b, a) = t;
    }
  }
  g.killing_inv_ = inverse(g.killing_);

  g.realization_.reserve(n);
  for (const auto& m : basis) g.realization_.push_back(to_dense(m, gens.dim));
  return g;
}

std::string LieAlgebra::label(std::size_t a) const {
  const std::size_t l = rank(), r = num_positive();
  if (a < l) return "h" + std::to_string(a + 1);
  if (a < l + r) return "e" + to_string(rs_.positive_root(a - l));
  return "f" + to_string(rs_.positive_root(a - l - r));
}

void LieAlgebra::check(const LieElement& x) const {
  if (x.size() != n_) {
    throw DimensionError("element of length " + std::to_string(x.size()) + " used in an algebra of dimension " +
                         std::to_string(n_));
  }
}

LieElement LieAlgebra::basis_element(std::size_t a) const {
  LieElement x(n_);
  x.coords.at(a) = 1;
  return x;
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  check(x);
  check(y);
  LieElement z(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    if (x.coords[a] == 0) continue;
    for (std::size_t b = 0; b < n_; ++b) {
      if (y.coords[b] == 0) continue;
      const Rational xy = x.coords[a] * y.coords[b];
      for (const auto& [c, v] : structure_[a][b]) z.coords[c] += xy * v;
    }
  }
  return z;
}

Rational LieAlgebra::killing_form(const LieElement& x, const LieElement& y) const {
  check(x);
  check(y);
  Rational s = 0;
  for (std::size_t a = 0; a < n_; ++a) {
    if (x.coords[a] == 0) continue;
    for (std::size_t b = 0; b < n_; ++b)
      if (y.coords[b] != 0 && killing_(a, b) != 0) s += x.coords[a] * killing_(a, b) * y.coords[b];
  }
  return s;
}

Matrix LieAlgebra::ad(const LieElement& x) const {
  check(x);
  Matrix m(n_, n_);
  for (std::size_t a = 0; a < n_; ++a) {
    if (x.coords[a] == 0) continue;
    for (std::size_t d = 0; d < n_; ++d)
      for (const auto& [c, v] : structure_[a][d]) m(c, d) += x.coords[a] * v;
  }
  return m;
}

std::size_t LieAlgebra::orbit_dim(const LieElement& x) const { return sheetcalc::rank(ad(x)); }

LieElement LieAlgebra::regular_nilpotent() const {
  LieElement x(n_);
  for (std::size_t i = 0; i < rank(); ++i) x.coords[positive_index(i)] = 1;
  return x;
}

LieElement LieAlgebra::exp_ad(const LieElement& e, const LieElement& x) const {
  LieElement sum = x;
  LieElement term = x;
  for (std::size_t k = 1; k <= n_; ++k) {
    term = bracket(e, term);
    if (term.is_zero()) return sum;
    term *= Rational(1, static_cast<long>(k));
    sum += term;
  }
  throw std::invalid_argument("exp_ad: element is not ad-nilpotent");
}

StructureReport check_structure(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Matrix& b = g.killing();
  StructureReport report;

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      SparseVec neg = g.structure(y, x);
      for (auto& [i, c] : neg) c = -c;
      if (g.structure(x, y) != neg) ++report.antisymmetry_failures;
    }

  std::vector<Rational> acc(n);
  // Adds coef * [[x, y], z] into acc.
  auto add_nested = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (const auto& [d, c] : g.structure(x, y))
      for (const auto& [e, c2] : g.structure(d, z)) acc[e] += c * c2;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        ++report.triples;
        add_nested(x, y, z);
        add_nested(y, z, x);
        add_nested(z, x, y);
        bool zero = true;
        for (auto& v : acc) {
          if (v != 0) zero = false;
          v = 0;
        }
        if (!zero) ++report.jacobi_failures;
      }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Rational lhs = 0, rhs = 0;
        for (const auto& [d, c] : g.structure(x, y)) lhs += c * b(d, z);
        for (const auto& [d, c] : g.structure(y, z)) rhs += c * b(x, d);
        if (lhs != rhs) ++report.invariance_failures;
      }

  report.killing_nondegenerate = determinant(b) != 0;
  return report;
}

SampleSet sample_elements(const LieAlgebra& g, std::size_t stratum, std::size_t count, std::uint64_t seed) {
  const std::size_t l = g.rank(), r = g.num_positive(), n = g.dim();
  if (stratum > 2 * r) {
    throw ConfigError("stratum " + std::to_string(stratum) + " exceeds 2r = " + std::to_string(2 * r));
  }
  SampleSet out;
  if (stratum % 2 != 0) {
    out.unreachable = true;
    out.short_of_count = count > 0;
    return out;
  }
  if (stratum == 0) {
    if (count > 0) out.elements.push_back(g.zero());
    out.short_of_count = count > 1;
    return out;
  }

  std::mt19937_64 rng(seed);
  auto small_int = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto nonzero_rational = [&]() {
    int p = 0;
    while (p == 0) p = small_int(-5, 5);
    Rational q(p, small_int(1, 3));
    q.canonicalize();
    return q;
  };

  // t with alpha_j(t) = c_j: the Cartan coordinates solve A^T t = c.
  Matrix cartan_t(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) cartan_t(j, i) = g.roots().cartan(i, j);
  const Matrix to_cartan = inverse(cartan_t);

  // Shape = (hyperplane set S, Levi nilpotent support T subset of S) or a
  // pair of positive roots (phi, psi), psi == phi meaning a single vector.
  struct Shape {
    bool levi = true;
    unsigned s_mask = 0, t_mask = 0;
    std::size_t phi = 0, psi = 0;
  };
  auto instance = [&](const Shape& sh) {
    LieElement x(n);
    if (sh.levi) {
      std::vector<Rational> c(l);
      for (std::size_t j = 0; j < l; ++j) c[j] = (sh.s_mask >> j & 1U) ? 0 : small_int(1, 6);
      const auto t = to_cartan.apply(c);
      for (std::size_t i = 0; i < l; ++i) x.coords[g.cartan_index(i)] = t[i];
      for (std::size_t j = 0; j < l; ++j)
        if (sh.t_mask >> j & 1U) x.coords[g.positive_index(j)] = nonzero_rational();
    } else {
      x.coords[g.positive_index(sh.phi)] = nonzero_rational();
      if (sh.psi != sh.phi) x.coords[g.positive_index(sh.psi)] = nonzero_rational();
    }
    return x;
  };

  std::vector<Shape> shapes;
  const unsigned full = (1U << l) - 1U;
  for (unsigned s = 0; s <= full; ++s) {
    for (unsigned t = s;; t = (t - 1) & s) {
      shapes.push_back({true, s, t, 0, 0});
      if (t == 0) break;
    }
  }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) shapes.push_back({false, 0, 0, a, b});

  std::vector<Shape> matching;
  for (const auto& sh : shapes) {
    const auto x = instance(sh);
    if (!x.is_zero() && g.orbit_dim(x) == stratum) matching.push_back(sh);
  }
  if (matching.empty()) {
    out.unreachable = true;
    out.short_of_count = count > 0;
    return out;
  }

  std::set<std::vector<Rational>> seen;
  const std::size_t max_attempts = 50 * count + 100;
  for (std::size_t attempt = 0; attempt < max_attempts && out.elements.size() < count; ++attempt) {
    LieElement x = instance(matching[attempt % matching.size()]);
    const int moves = small_int(0, 2);
    for (int m = 0; m < moves; ++m) {
      const auto k = static_cast<std::size_t>(small_int(0, static_cast<int>(r) - 1));
      const std::size_t idx = small_int(0, 1) ? g.positive_index(k) : g.negative_index(k);
      LieElement e = g.basis_element(idx);
      e *= nonzero_rational();
      x = g.exp_ad(e, x);
    }
    if (g.orbit_dim(x) != stratum) continue;
    if (!seen.insert(x.coords).second) continue;
    out.elements.push_back(std::move(x));
  }
  out.short_of_count = out.elements.size() < count;
  return out;
}

}  // namespace sheetcalc
