#include "sheetcalc/exterior.hpp"

#include <algorithm>
#include <numeric>

#include "sheetcalc/errors.hpp"
#include "sheetcalc/linalg.hpp"

namespace sheetcalc {

LabelSet LabelSet::of(std::span<const std::size_t> labels) {
  LabelSet s;
  for (auto i : labels) {
    if (i >= kMaxLabels) throw DimensionError("label beyond the exterior-algebra capacity");
    s.set(i);
  }
  return s;
}

std::size_t LabelSet::count_above(std::size_t i) const {
  const std::size_t w = i >> 6, b = i & 63;
  std::size_t c = 0;
  const std::uint64_t mask = (b == 63) ? 0 : (~std::uint64_t{0} << (b + 1));
  c += static_cast<std::size_t>(std::popcount(words_[w] & mask));
  if (w == 0) c += static_cast<std::size_t>(std::popcount(words_[1]));
  return c;
}

std::vector<std::size_t> LabelSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < 2; ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

int merge_sign(const LabelSet& s, const LabelSet& t) {
  if (s.intersects(t)) return 0;
  std::size_t inversions = 0;
  for (auto i : t.members()) inversions += s.count_above(i);
  return (inversions % 2 == 0) ? 1 : -1;
}

ExtElement ExtElement::one(std::size_t n) {
  ExtElement e(n);
  e.terms_.emplace(LabelSet{}, 1);
  return e;
}

ExtElement ExtElement::basis_wedge(std::size_t n, std::span<const std::size_t> labels) {
  std::vector<std::size_t> v(labels.begin(), labels.end());
  for (auto i : v)
    if (i >= n) throw DimensionError("basis label out of range");
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  ExtElement e(n);
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) return e;
  e.terms_.emplace(LabelSet::of(v), sign);
  return e;
}

ExtElement ExtElement::wedge_of(std::span<const LieElement> xs) {
  if (xs.empty()) throw DimensionError("wedge_of needs at least one element");
  const std::size_t n = xs.front().size();
  ExtElement acc = one(n);
  for (const auto& x : xs) {
    if (x.size() != n) throw DimensionError("wedge_of: elements of different dimensions");
    ExtElement lin(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x.coords[i] == 0) continue;
      LabelSet s;
      s.set(i);
      lin.terms_.emplace(s, x.coords[i]);
    }
    acc = wedge(acc, lin);
  }
  return acc;
}

int ExtElement::grade() const {
  if (terms_.empty()) return -1;
  const auto g = terms_.begin()->first.count();
  for (const auto& [s, c] : terms_)
    if (s.count() != g) return -1;
  return static_cast<int>(g);
}

Rational ExtElement::coefficient(const LabelSet& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExtElement::add_term(const LabelSet& s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  if (o.n_ != n_) throw DimensionError("exterior sum: dimension mismatch");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  if (o.n_ != n_) throw DimensionError("exterior difference: dimension mismatch");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

ExtElement& ExtElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

ExtElement wedge(const ExtElement& u, const ExtElement& v) {
  if (u.dim() != v.dim()) throw DimensionError("wedge: dimension mismatch");
  ExtElement w(u.dim());
  for (const auto& [s, a] : u.terms()) {
    for (const auto& [t, b] : v.terms()) {
      const int sign = merge_sign(s, t);
      if (sign == 0) continue;
      Rational c = a * b;
      if (sign < 0) c = -c;
      w.add_term(s | t, c);
    }
  }
  return w;
}

ExtElement wedge_power(const ExtElement& u, unsigned k) {
  ExtElement p = ExtElement::one(u.dim());
  for (unsigned i = 0; i < k && !p.is_zero(); ++i) p = wedge(p, u);
  return p;
}

ExtElement coboundary(const LieAlgebra& g, const LieElement& x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw DimensionError("coboundary: element dimension mismatch");
  const auto gx = g.killing().apply(x.coords);
  // M_cd = -B(x, [Y_c, Y_d]); dx = sum_{c<d} M_cd Y^c ^ Y^d.
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = c + 1; d < n; ++d) {
      Rational v = 0;
      for (const auto& [k, s] : g.structure(c, d)) v += s * gx[k];
      if (v == 0) continue;
      m(c, d) = -v;
      m(d, c) = v;
    }
  }
  const Matrix& inv = g.killing_inverse();
  const Matrix coeffs = inv * m * inv;
  ExtElement dx(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coeffs(a, b) == 0) continue;
      LabelSet s;
      s.set(a);
      s.set(b);
      dx.add_term(s, coeffs(a, b));
    }
  }
  return dx;
}

Rational ext_pairing(const LieAlgebra& g, const ExtElement& u, const ExtElement& v) {
  if (u.dim() != g.dim() || v.dim() != g.dim()) throw DimensionError("ext_pairing: dimension mismatch");
  const Matrix& gram = g.killing();
  const std::size_t l = g.rank();
  Rational total = 0;
  for (const auto& [s, a] : u.terms()) {
    const auto rows = s.members();
    Root ws(l, 0);
    for (auto i : rows) ws = ws + g.weight(i);
    for (const auto& [t, b] : v.terms()) {
      if (t.count() != rows.size()) continue;
      const auto cols = t.members();
      Root wt = ws;
      for (auto j : cols) wt = wt + g.weight(j);
      // B pairs weight spaces of opposite weight only.
      if (std::any_of(wt.begin(), wt.end(), [](int c) { return c != 0; })) continue;
      Matrix sub(rows.size(), cols.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = gram(rows[i], cols[j]);
      const Rational det = determinant(sub);
      if (det != 0) total += a * b * det;
    }
  }
  return total;
}

PowerProfile dx_power_profile(const LieAlgebra& g, const LieElement& x) {
  PowerProfile prof;
  const ExtElement dx = coboundary(g, x);
  prof.witness = ExtElement::one(g.dim());
  for (;;) {
    ExtElement next = wedge(prof.witness, dx);
    if (next.is_zero()) break;
    prof.witness = std::move(next);
    ++prof.k_max;
  }
  const Matrix adx = g.ad(x);
  prof.half_orbit_dim = rank(adx) / 2;

  const auto image = column_space_basis(adx);
  if (image.size() != 2 * prof.k_max) return prof;
  ExtElement top = ExtElement::one(g.dim());
  if (!image.empty()) {
    std::vector<LieElement> ws;
    for (const auto& col : image) ws.emplace_back(col);
    top = ExtElement::wedge_of(ws);
  }
  if (top.terms().size() != prof.witness.terms().size() || top.is_zero()) return prof;
  const auto& [s0, c0] = *top.terms().begin();
  const Rational ratio = prof.witness.coefficient(s0) / c0;
  if (ratio == 0) return prof;
  prof.witness_in_image = (ratio * top == prof.witness);
  return prof;
}

GammaHom::GammaHom(const LieAlgebra& g) : n_(g.dim()) {
  const Matrix& inv = g.killing_inverse();
  images_.reserve(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    // y_j = B(Y^j, -) with Y^j = sum_i Ginv_ji Y_i.
    images_.push_back(Rational(-1) * coboundary(g, LieElement(inv.row(j))));
  }
}

ExtElement GammaHom::operator()(const Poly& p) const {
  if (p.nvars() != n_) throw DimensionError("gamma: polynomial over the wrong variable count");
  ExtElement out(n_);
  for (const auto& [m, c] : p.terms()) {
    ExtElement term = ExtElement::one(n_);
    for (std::size_t j = 0; j < n_ && !term.is_zero(); ++j)
      for (unsigned e = 0; e < m[j] && !term.is_zero(); ++e) term = wedge(term, images_[j]);
    out += c * term;
  }
  return out;
}

}  // namespace sheetcalc
