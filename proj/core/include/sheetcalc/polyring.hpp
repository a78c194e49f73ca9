#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sheetcalc/chevalley.hpp"
#include "sheetcalc/linalg.hpp"
#include "sheetcalc/rational.hpp"

namespace sheetcalc {

/// Dense exponent vector over the n coordinate functions y_0..y_{n-1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  static Monomial variable(std::size_t nvars, std::size_t j, unsigned power = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t j) const { return exps_[j]; }
  const std::vector<std::uint8_t>& exponents() const { return exps_; }

  void raise(std::size_t j, unsigned by = 1);
  /// Lowers y_j by one; requires exponent > 0.
  void lower(std::size_t j);
  bool divides(const Monomial& other) const;
  /// prod_j e_j!
  Integer factorial() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<std::uint8_t> exps_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order, larger monomials first: higher degree wins,
/// ties go to the larger exponent at the first differing variable.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exponents() > b.exponents();
  }
};

/// Sparse polynomial over Q in n variables; no zero coefficients stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t j);
  static Poly from_terms(std::size_t nvars, Terms terms);
  /// sum_j coeffs[j] * y_j
  static Poly linear(const std::vector<Rational>& coeffs);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }
  bool is_homogeneous() const;
  Poly homogeneous_component(unsigned d) const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  Poly pow(unsigned k) const;
  /// d/dy_j
  Poly partial(std::size_t j) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// "2*y0^2 + 2*y1*y2", "0" for zero.
  std::string to_string() const;
  /// Inverse of to_string; coefficients may be omitted ("y1*y2 - y3").
  static Poly parse(std::string_view text, std::size_t nvars);

 private:
  void require_same(const Poly& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// op(d/dy) applied to f with plain coordinate partials.
Poly apply_operator(const Poly& op, const Poly& f);

/// Substitutes y_j -> images[j] (same target variable count for all images).
Poly substitute(const Poly& p, const std::vector<Poly>& images);

/// The Killing-form identification g = g* on polynomial functions.
///
/// y_j is the coordinate functional dual to the basis element Y_j. The linear
/// function B(z, -) pairs with B(w, -) to B(z, w), and the pairing extends to
/// P(g) so that (d_q p, f) = (p, q f), where d_q substitutes for each y_j the
/// directional derivative along the B-dual basis vector Y^j.
class KillingDual {
 public:
  /// Unattached: every operation throws ConfigError.
  KillingDual() = default;
  explicit KillingDual(const LieAlgebra& g);

  bool attached() const { return attached_; }
  std::size_t nvars() const { return n_; }

  /// q* : the symbol of d_q in plain partials (y_j -> sum_i Ginv_ji y_i).
  Poly dual(const Poly& q) const;
  /// d_q p
  Poly differentiate(const Poly& q, const Poly& p) const;
  Rational pairing(const Poly& p, const Poly& q) const;
  /// B(z, -) as a linear polynomial.
  Poly linear_form(const LieElement& z) const;
  /// d_{p_i*} q == 0 for all generators.
  bool is_harmonic(const Poly& q, const std::vector<Poly>& gens) const;

 private:
  void require(const Poly& p) const;

  bool attached_ = false;
  std::size_t n_ = 0;
  Matrix killing_;
  std::vector<Poly> dual_images_;
};

Rational pairing(const KillingDual& dual, const Poly& p, const Poly& q);
bool is_harmonic(const KillingDual& dual, const Poly& q, const std::vector<Poly>& gens);

/// Infinitesimal adjoint action on functions: (Y.f)(x) = -(d/dt) f(x + t[Y, x]).
/// Sends B(z, -) to B([Y, z], -).
Poly lie_derivative(const LieAlgebra& g, std::size_t basis_index, const Poly& f);
Poly lie_derivative(const LieAlgebra& g, const LieElement& y, const Poly& f);

/// Finite-dimensional span of polynomials with a reduced echelon basis under
/// the grlex order; equal spans have identical bases.
class PolySpace {
 public:
  explicit PolySpace(std::size_t nvars = 0) : nvars_(nvars) {}
  static PolySpace span(std::size_t nvars, const std::vector<Poly>& polys);

  std::size_t nvars() const { return nvars_; }
  std::size_t dim() const { return echelon_.dim(); }
  /// Returns true when the dimension grew.
  bool insert(const Poly& p);
  bool contains(const Poly& p) const;
  /// Reduced basis, leading monomials in decreasing grlex order.
  std::vector<Poly> basis() const;

  friend bool operator==(const PolySpace& a, const PolySpace& b);

 private:
  std::size_t nvars_;
  SparseEchelon<Monomial, GrlexGreater> echelon_;
};

}  // namespace sheetcalc
