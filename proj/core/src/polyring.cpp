#include "sheetcalc/polyring.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sheetcalc/errors.hpp"

namespace sheetcalc {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t j, unsigned power) {
  Monomial m(nvars);
  m.raise(j, power);
  return m;
}

void Monomial::raise(std::size_t j, unsigned by) {
  if (exps_[j] + by > std::numeric_limits<std::uint8_t>::max()) throw std::overflow_error("monomial exponent overflow");
  exps_[j] = static_cast<std::uint8_t>(exps_[j] + by);
  degree_ += by;
}

void Monomial::lower(std::size_t j) {
  if (exps_[j] == 0) throw std::logic_error("Monomial::lower on a zero exponent");
  --exps_[j];
  --degree_;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > other.exps_[j]) return false;
  return true;
}

Integer Monomial::factorial() const {
  Integer f = 1;
  for (auto e : exps_) {
    for (unsigned k = 2; k <= e; ++k) f *= k;
  }
  return f;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("monomial product over different variable counts");
  Monomial c = a;
  for (std::size_t j = 0; j < b.exps_.size(); ++j)
    if (b.exps_[j] != 0) c.raise(j, b.exps_[j]);
  return c;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'y' + std::to_string(j);
    if (exps_[j] > 1) out += '^' + std::to_string(exps_[j]);
  }
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t j) {
  if (j >= nvars) throw DimensionError("variable index out of range");
  Poly p(nvars);
  p.add_term(Monomial::variable(nvars, j), 1);
  return p;
}

Poly Poly::from_terms(std::size_t nvars, Terms terms) {
  Poly p(nvars);
  for (auto& [m, c] : terms) {
    if (m.nvars() != nvars) throw DimensionError("term over a different variable count");
    if (c != 0) p.terms_.emplace(m, std::move(c));
  }
  return p;
}

Poly Poly::linear(const std::vector<Rational>& coeffs) {
  Poly p(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) p.terms_.emplace(Monomial::variable(coeffs.size(), j), coeffs[j]);
  return p;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Poly Poly::homogeneous_component(unsigned d) const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) p.terms_.emplace(m, c);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial(nvars_)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DimensionError("term over a different variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Poly::require_same(const Poly& o) const {
  if (o.nvars_ != nvars_) {
    throw DimensionError("polynomials over " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) +
                         " variables");
  }
}

Poly& Poly::operator+=(const Poly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly Poly::operator-() const { return Rational(-1) * Poly(*this); }

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same(b);
  Poly c(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) c.add_term(ma * mb, ca * cb);
  return c;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::partial(std::size_t j) const {
  if (j >= nvars_) throw DimensionError("partial: variable index out of range");
  Poly d(nvars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[j];
    if (e == 0) continue;
    Monomial lowered = m;
    lowered.lower(j);
    d.add_term(lowered, c * e);
  }
  return d;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionError("evaluate: point has the wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t j = 0; j < nvars_ && t != 0; ++j) {
      for (unsigned k = 0; k < m[j]; ++k) t *= point[j];
    }
    total += t;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.degree() == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

namespace {

std::size_t parse_index(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed polynomial: '" + std::string(whole) + "'");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed polynomial: '" + std::string(whole) + "'");
  return static_cast<std::size_t>(std::stoul(std::string(s)));
}

}  // namespace

Poly Poly::parse(std::string_view text, std::size_t nvars) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");

  Poly p(nvars);
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rational sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed polynomial: '" + std::string(text) + "'");

    Rational coeff = sign;
    Monomial m(nvars);
    std::size_t f = 0;
    while (f <= term.size()) {
      std::size_t star = term.find('*', f);
      if (star == std::string_view::npos) star = term.size();
      const auto factor = term.substr(f, star - f);
      if (factor.empty()) throw std::invalid_argument("malformed polynomial: '" + std::string(text) + "'");
      if (factor[0] == 'y') {
        const auto caret = factor.find('^');
        const auto var = parse_index(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
        const unsigned power = caret == std::string_view::npos
                                   ? 1U
                                   : static_cast<unsigned>(parse_index(factor.substr(caret + 1), text));
        if (var >= nvars) throw DimensionError("variable y" + std::to_string(var) + " out of range");
        m.raise(var, power);
      } else {
        coeff *= parse_rational(factor);
      }
      f = star + 1;
    }
    p.add_term(m, coeff);
    pos = end;
  }
  return p;
}

Poly apply_operator(const Poly& op, const Poly& f) {
  if (op.nvars() != f.nvars()) throw DimensionError("apply_operator: variable count mismatch");
  const std::size_t n = f.nvars();
  Poly out(n);
  for (const auto& [mo, co] : op.terms()) {
    for (const auto& [mf, cf] : f.terms()) {
      if (mo.degree() > mf.degree() || !mo.divides(mf)) continue;
      Monomial rest(n);
      Integer falling = 1;
      for (std::size_t j = 0; j < n; ++j) {
        const unsigned e = mf[j], d = mo[j];
        for (unsigned k = 0; k < d; ++k) falling *= (e - k);
        if (e > d) rest.raise(j, e - d);
      }
      out.add_term(rest, co * cf * falling);
    }
  }
  return out;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
  if (images.size() != p.nvars()) throw DimensionError("substitute: one image per variable required");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  Poly out(target);
  // Powers of each image, computed on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t j, unsigned e) -> const Poly& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(Poly::constant(target, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * images[j]);
    return pw[e];
  };
  for (const auto& [m, c] : p.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t j = 0; j < p.nvars(); ++j)
      if (m[j] != 0) term = term * power(j, m[j]);
    out += term;
  }
  return out;
}

// ------------------------------------------------------------- KillingDual

KillingDual::KillingDual(const LieAlgebra& g) : attached_(true), n_(g.dim()), killing_(g.killing()) {
  const Matrix& inv = g.killing_inverse();
  dual_images_.reserve(n_);
  for (std::size_t j = 0; j < n_; ++j) dual_images_.push_back(Poly::linear(inv.row(j)));
}

void KillingDual::require(const Poly& p) const {
  if (!attached_) throw ConfigError("polynomial pairing needs an ambient Lie algebra");
  if (p.nvars() != n_) {
    throw DimensionError("polynomial over " + std::to_string(p.nvars()) + " variables, algebra has dimension " +
                         std::to_string(n_));
  }
}

Poly KillingDual::dual(const Poly& q) const {
  require(q);
  return substitute(q, dual_images_);
}

Poly KillingDual::differentiate(const Poly& q, const Poly& p) const {
  require(p);
  return apply_operator(dual(q), p);
}

Rational KillingDual::pairing(const Poly& p, const Poly& q) const {
  require(p);
  const Poly qs = dual(q);
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) {
    auto it = qs.terms().find(m);
    if (it == qs.terms().end()) continue;
    s += c * it->second * Rational(m.factorial());
  }
  return s;
}

Poly KillingDual::linear_form(const LieElement& z) const {
  if (!attached_) throw ConfigError("linear form needs an ambient Lie algebra");
  if (z.size() != n_) throw DimensionError("linear_form: element dimension mismatch");
  return Poly::linear(killing_.apply(z.coords));
}

bool KillingDual::is_harmonic(const Poly& q, const std::vector<Poly>& gens) const {
  require(q);
  for (const auto& p : gens)
    if (!differentiate(p, q).is_zero()) return false;
  return true;
}

Rational pairing(const KillingDual& dual, const Poly& p, const Poly& q) { return dual.pairing(p, q); }

bool is_harmonic(const KillingDual& dual, const Poly& q, const std::vector<Poly>& gens) {
  return dual.is_harmonic(q, gens);
}

// ------------------------------------------------------------ Lie action

Poly lie_derivative(const LieAlgebra& g, std::size_t a, const Poly& f) {
  const std::size_t n = g.dim();
  if (f.nvars() != n) throw DimensionError("lie_derivative: variable count mismatch");
  Poly out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Poly dj = f.partial(j);
    if (dj.is_zero()) continue;
    // coordinate j of [Y_a, x] as a linear function of x
    Poly coord(n);
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [c, v] : g.structure(a, b))
        if (c == j) coord.add_term(Monomial::variable(n, b), v);
    if (coord.is_zero()) continue;
    out -= dj * coord;
  }
  return out;
}

Poly lie_derivative(const LieAlgebra& g, const LieElement& y, const Poly& f) {
  if (y.size() != g.dim()) throw DimensionError("lie_derivative: element dimension mismatch");
  Poly out(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a)
    if (y.coords[a] != 0) out += y.coords[a] * lie_derivative(g, a, f);
  return out;
}

// --------------------------------------------------------------- PolySpace

PolySpace PolySpace::span(std::size_t nvars, const std::vector<Poly>& polys) {
  PolySpace s(nvars);
  for (const auto& p : polys) s.insert(p);
  return s;
}

bool PolySpace::insert(const Poly& p) {
  if (p.nvars() != nvars_) throw DimensionError("PolySpace::insert: variable count mismatch");
  return echelon_.insert(p.terms());
}

bool PolySpace::contains(const Poly& p) const {
  if (p.nvars() != nvars_) throw DimensionError("PolySpace::contains: variable count mismatch");
  return echelon_.contains(p.terms());
}

std::vector<Poly> PolySpace::basis() const {
  std::vector<Poly> out;
  for (auto& row : echelon_.sorted_rows()) out.push_back(Poly::from_terms(nvars_, std::move(row)));
  return out;
}

bool operator==(const PolySpace& a, const PolySpace& b) {
  return a.nvars_ == b.nvars_ && a.dim() == b.dim() && a.basis() == b.basis();
}

}  // namespace sheetcalc
