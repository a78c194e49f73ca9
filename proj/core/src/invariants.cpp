#include "sheetcalc/invariants.hpp"

#include <algorithm>
#include <string>

#include "sheetcalc/errors.hpp"
#include "sheetcalc/gammamap.hpp"

namespace sheetcalc {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t nvars) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<Poly>(n, Poly(nvars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Poly trace(const PolyMatrix& m, std::size_t nvars) {
  Poly t(nvars);
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

Poly pfaffian(const PolyMatrix& skew, std::size_t nvars) {
  const std::size_t k = skew.size() / 2;
  Poly total(nvars);
  for (const auto& m : enumerate_matchings(k)) {
    Poly term = Poly::constant(nvars, m.sign);
    for (const auto& [a, b] : m.pairs) {
      term = term * skew[a][b];
      if (term.is_zero()) break;
    }
    total += term;
  }
  return total;
}

// All multisets of indices into `gens` (degrees below d) with degree sum d,
// as products.
void lower_products(const std::vector<Poly>& gens, std::size_t start, int remaining, const Poly& acc,
                    std::vector<Poly>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i < gens.size(); ++i) {
    const int d = gens[i].degree();
    if (d > remaining) continue;
    lower_products(gens, i, remaining - d, acc * gens[i], out);
  }
}

}  // namespace

Matrix MatrixRep::image(const LieElement& x) const {
  if (x.size() != mats.size()) throw DimensionError("representation: element dimension mismatch");
  Matrix m(dim, dim);
  for (std::size_t a = 0; a < mats.size(); ++a)
    if (x.coords[a] != 0) m += x.coords[a] * mats[a];
  return m;
}

std::size_t homomorphism_failures(const LieAlgebra& g, const MatrixRep& rep) {
  if (rep.mats.size() != g.dim()) throw DimensionError("representation has the wrong number of matrices");
  std::size_t failures = 0;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    for (std::size_t b = a + 1; b < g.dim(); ++b) {
      const Matrix lhs = rep.image(g.bracket(g.basis_element(a), g.basis_element(b)));
      const Matrix rhs = rep.mats[a] * rep.mats[b] - rep.mats[b] * rep.mats[a];
      if (!(lhs == rhs)) ++failures;
    }
  }
  return failures;
}

MatrixRep defining_rep(const LieAlgebra& g) {
  MatrixRep rep;
  rep.mats = g.realization();
  rep.dim = rep.mats.empty() ? 0 : rep.mats.front().rows();
  if (const auto bad = homomorphism_failures(g, rep); bad != 0)
    throw RepresentationError("defining representation fails the bracket check on " + std::to_string(bad) +
                              " basis pairs");
  return rep;
}

MatrixRep adjoint_rep(const LieAlgebra& g) {
  MatrixRep rep;
  rep.dim = g.dim();
  for (std::size_t a = 0; a < g.dim(); ++a) rep.mats.push_back(g.ad(g.basis_element(a)));
  return rep;
}

std::vector<std::vector<Poly>> generic_matrix(const LieAlgebra& g, const MatrixRep& rep) {
  const std::size_t n = g.dim();
  PolyMatrix x(rep.dim, std::vector<Poly>(rep.dim, Poly(n)));
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix& m = rep.mats[j];
    for (std::size_t r = 0; r < rep.dim; ++r)
      for (std::size_t c = 0; c < rep.dim; ++c)
        if (m(r, c) != 0) x[r][c].add_term(Monomial::variable(n, j), m(r, c));
  }
  return x;
}

std::vector<Poly> raw_generators(const LieAlgebra& g) {
  const auto& type = g.roots().type();
  const std::size_t n = g.dim();
  const auto l = static_cast<std::size_t>(type.rank);
  const MatrixRep rep = defining_rep(g);
  const PolyMatrix x = generic_matrix(g, rep);

  std::vector<unsigned> degrees;
  switch (type.family) {
    case Family::A:
      for (unsigned d = 2; d <= l + 1; ++d) degrees.push_back(d);
      break;
    case Family::B:
    case Family::C:
      for (unsigned i = 1; i <= l; ++i) degrees.push_back(2 * i);
      break;
    case Family::D:
      for (unsigned i = 1; i + 1 <= l; ++i) degrees.push_back(2 * i);
      break;
  }

  std::vector<Poly> gens;
  PolyMatrix power = x;
  unsigned current = 1;
  for (unsigned d : degrees) {
    while (current < d) {
      power = multiply(power, x, n);
      ++current;
    }
    gens.push_back(trace(power, n));
  }
  if (type.family == Family::D) {
    // S X is skew for the form pairing i with l + i.
    PolyMatrix sx(2 * l, std::vector<Poly>(2 * l, Poly(n)));
    for (std::size_t a = 0; a < 2 * l; ++a) {
      const std::size_t partner = a < l ? a + l : a - l;
      sx[a] = x[partner];
    }
    gens.push_back(pfaffian(sx, n));
  }
  std::stable_sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  return gens;
}

std::vector<Poly> chevalley_generators(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const KillingDual dual(g);
  std::vector<Poly> gens = raw_generators(g);

  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero() || !gens[i].is_homogeneous())
      throw GeneratorError("generator " + std::to_string(i + 1) + " is zero or inhomogeneous");
    for (std::size_t a = 0; a < n; ++a)
      if (!lie_derivative(g, a, gens[i]).is_zero())
        throw GeneratorError("generator " + std::to_string(i + 1) + " is not invariant under " + g.label(a));
  }

  // Orthogonalise each generator against the products of lower ones.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Poly> lower;
    for (std::size_t j = 0; j < i; ++j)
      if (gens[j].degree() < gens[i].degree()) lower.push_back(gens[j]);
    std::vector<Poly> products;
    lower_products(lower, 0, gens[i].degree(), Poly::constant(n, 1), products);
    if (products.empty()) continue;
    const std::size_t m = products.size();
    Matrix gram(m, m);
    std::vector<Rational> rhs(m);
    for (std::size_t s = 0; s < m; ++s) {
      rhs[s] = dual.pairing(gens[i], products[s]);
      for (std::size_t t = s; t < m; ++t) {
        gram(s, t) = dual.pairing(products[s], products[t]);
        gram(t, s) = gram(s, t);
      }
    }
    const auto c = solve(gram, rhs);
    if (!c) throw GeneratorError("harmonic adjustment of generator " + std::to_string(i + 1) + " has no solution");
    for (std::size_t s = 0; s < m; ++s)
      if ((*c)[s] != 0) gens[i] -= (*c)[s] * products[s];
  }

  const QMatrix q = q_matrix(g, gens);
  if (rank(q.at(g.regular_nilpotent())) != gens.size())
    throw GeneratorError("generator Jacobian is degenerate at the regular nilpotent");
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (!dual.is_harmonic(q.entries[i][j], gens))
        throw GeneratorError("partial d/dy" + std::to_string(j) + " of generator " + std::to_string(i + 1) +
                             " is not harmonic");
  return gens;
}

Matrix QMatrix::at(const LieElement& x) const {
  Matrix m(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m(i, j) = entries[i][j].evaluate(x.coords);
  return m;
}

QMatrix q_matrix(const LieAlgebra& g, const std::vector<Poly>& gens) {
  QMatrix q;
  for (const auto& p : gens) {
    if (p.nvars() != g.dim()) throw DimensionError("q_matrix: generator over the wrong variable count");
    std::vector<Poly> row;
    row.reserve(g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(p.partial(j));
    q.entries.push_back(std::move(row));
    q.degrees.push_back(static_cast<unsigned>(p.degree() - 1));
  }
  return q;
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t k = m.size();
  if (k == 0) throw DimensionError("determinant of an empty matrix");
  const std::size_t nvars = m[0][0].nvars();
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly total(nvars);
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Poly> row;
      row.reserve(k - 1);
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    const Poly sub = poly_determinant(minor);
    if (sub.is_zero()) continue;
    if (c % 2 == 0)
      total += m[0][c] * sub;
    else
      total -= m[0][c] * sub;
  }
  return total;
}

PolySpace minors_space(const QMatrix& q, std::size_t budget) {
  const std::size_t l = q.rows(), n = q.cols();
  PolySpace space(n);
  if (l == 0 || l > n) return space;
  std::size_t count = 1;
  for (std::size_t i = 1; i <= l; ++i) {
    count = count * (n - l + i) / i;
    if (count > budget)
      throw BudgetError("minors_space: more than " + std::to_string(budget) + " minors");
  }
  std::vector<std::size_t> cols(l);
  for (std::size_t i = 0; i < l; ++i) cols[i] = i;
  for (;;) {
    std::vector<std::vector<Poly>> sub(l);
    for (std::size_t r = 0; r < l; ++r)
      for (auto c : cols) sub[r].push_back(q.entries[r][c]);
    space.insert(poly_determinant(sub));
    std::size_t i = l;
    while (i > 0 && cols[i - 1] == n - l + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < l; ++j) cols[j] = cols[j - 1] + 1;
  }
  return space;
}

}  // namespace sheetcalc
