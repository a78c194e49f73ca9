#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "sheetcalc/errors.hpp"
#include "sheetcalc/polyring.hpp"
#include "support.hpp"

namespace sheetcalc {
namespace {

using testing::algebra;
using testing::random_element;
using testing::random_poly;
using testing::random_rational;
using testing::seeds;

// Pairing oracle: y_i pairs with y_j to Ginv_ij, extended to monomials as a
// permanent over all matchings of the factors.
Rational monomial_pairing(const Matrix& ginv, const Monomial& a, const Monomial& b) {
  std::vector<std::size_t> fa, fb;
  for (std::size_t j = 0; j < a.nvars(); ++j) {
    for (unsigned e = 0; e < a[j]; ++e) fa.push_back(j);
    for (unsigned e = 0; e < b[j]; ++e) fb.push_back(j);
  }
  if (fa.size() != fb.size()) return 0;
  std::vector<std::size_t> perm(fb.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t s = 0; s < fa.size(); ++s) term *= ginv(fa[s], fb[perm[s]]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rational pairing_oracle(const LieAlgebra& g, const Poly& p, const Poly& q) {
  Rational total = 0;
  for (const auto& [ma, ca] : p.terms())
    for (const auto& [mb, cb] : q.terms()) total += ca * cb * monomial_pairing(g.killing_inverse(), ma, mb);
  return total;
}

TEST(Monomial, DegreeDivisionAndFactorial) {
  Monomial m(3);
  m.raise(0, 2);
  m.raise(2);
  EXPECT_EQ(m.degree(), 3U);
  EXPECT_EQ(m.factorial(), 2);
  EXPECT_TRUE(Monomial::variable(3, 0).divides(m));
  EXPECT_FALSE(Monomial::variable(3, 1).divides(m));
  m.lower(0);
  EXPECT_EQ(m, Monomial::variable(3, 0) * Monomial::variable(3, 2));
}

TEST(Poly, GrlexOrderPutsHigherDegreeFirst) {
  const Poly p = Poly::parse("y2 + y0*y1 + y1^2 + 3", 3);
  std::vector<std::string> order;
  for (const auto& [m, c] : p.terms()) order.push_back(m.to_string());
  ASSERT_EQ(order.size(), 4U);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.terms().begin()->first, Monomial::variable(3, 0) * Monomial::variable(3, 1));
  EXPECT_EQ(p.constant_term(), 3);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_TRUE(p.homogeneous_component(2).is_homogeneous());
}

TEST(Poly, TextRoundTrip) {
  for (auto seed : seeds(50)) {
    SplitMix64 rng(seed);
    const Poly p = random_poly(4, static_cast<unsigned>(rng.uniform(0, 3)), 4, rng) + random_poly(4, 1, 2, rng);
    EXPECT_EQ(Poly::parse(p.to_string(), 4), p) << p.to_string();
  }
  EXPECT_EQ(Poly(3).to_string(), "0");
  EXPECT_EQ(Poly::parse("0", 3), Poly(3));
  EXPECT_EQ(Poly::parse("y1*y2 - y0", 3), Poly::variable(3, 1) * Poly::variable(3, 2) - Poly::variable(3, 0));
}

TEST(Poly, RingAxiomsAndEvaluationHomomorphism) {
  for (auto seed : seeds(50)) {
    SplitMix64 rng(seed);
    const Poly a = random_poly(3, 2, 3, rng), b = random_poly(3, 1, 3, rng), c = random_poly(3, 2, 2, rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    std::vector<Rational> pt{random_rational(rng), random_rational(rng), random_rational(rng)};
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a + c).evaluate(pt), a.evaluate(pt) + c.evaluate(pt));
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Poly, PartialsObeyLeibniz) {
  for (auto seed : seeds(50)) {
    SplitMix64 rng(seed);
    const Poly a = random_poly(3, 2, 3, rng), b = random_poly(3, 3, 3, rng);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ((a * b).partial(j), a.partial(j) * b + a * b.partial(j));
  }
}

TEST(Poly, TraceSquareOnSlTwo) {
  // Coordinates (h, e, f) -> (b, a, c); tr([[b, a], [c, -b]]^2) = 2b^2 + 2ac.
  const Poly p = Poly::parse("2*y0^2 + 2*y1*y2", 3);
  EXPECT_EQ(p.partial(0), Poly::parse("4*y0", 3));
  EXPECT_EQ(p.partial(1), Poly::parse("2*y2", 3));
}

TEST(Poly, MixedVariableCountsThrow) {
  EXPECT_THROW(Poly::variable(2, 0) + Poly::variable(3, 0), DimensionError);
}

TEST(Poly, SubstituteAndApplyOperator) {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  const Poly p = x * x * y;
  EXPECT_EQ(substitute(p, {x + y, x - y}), (x + y) * (x + y) * (x - y));
  // (d/dx)^2 applied to x^2 y gives 2y.
  EXPECT_EQ(apply_operator(x * x, p), Rational(2) * y);
  EXPECT_EQ(apply_operator(Poly::constant(2, 3), p), Rational(3) * p);
}

TEST(KillingDual, SlTwoExamples) {
  const LieAlgebra g = algebra("A1");
  const KillingDual dual(g);
  const Poly lh = dual.linear_form(g.basis_element(0));
  EXPECT_EQ(dual.pairing(lh, lh), 8);
  EXPECT_EQ(dual.pairing(lh, lh * lh), 0);
  const Poly p1 = Poly::parse("2*y0^2 + 2*y1*y2", 3);
  EXPECT_EQ(dual.pairing(p1, p1), pairing_oracle(g, p1, p1));
  EXPECT_NE(dual.pairing(p1, p1), 0);

  EXPECT_TRUE(dual.is_harmonic(Poly::constant(3, 1), {p1}));
  for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(dual.is_harmonic(Poly::variable(3, j), {p1}));
  EXPECT_FALSE(dual.is_harmonic(p1, {p1}));
  EXPECT_TRUE(dual.differentiate(p1, p1).is_homogeneous());
  EXPECT_EQ(dual.differentiate(p1, p1).degree(), 0);
}

TEST(KillingDual, LinearFormsPairByTheKillingForm) {
  for (const char* type : {"A1", "A2", "B2"}) {
    const LieAlgebra g = algebra(type);
    const KillingDual dual(g);
    for (auto seed : seeds(20)) {
      SplitMix64 rng(seed);
      const LieElement z = random_element(g.dim(), rng), w = random_element(g.dim(), rng);
      EXPECT_EQ(dual.pairing(dual.linear_form(z), dual.linear_form(w)), g.killing_form(z, w));
      // B(z, -) evaluated at w.
      EXPECT_EQ(dual.linear_form(z).evaluate(w.coords), g.killing_form(z, w));
    }
  }
}

TEST(KillingDual, PairingMatchesPermanentOracle) {
  for (const char* type : {"A1", "A2"}) {
    const LieAlgebra g = algebra(type);
    const KillingDual dual(g);
    for (auto seed : seeds(30)) {
      SplitMix64 rng(seed);
      const auto d = static_cast<unsigned>(rng.uniform(0, 3));
      const Poly p = random_poly(g.dim(), d, 3, rng), q = random_poly(g.dim(), d, 3, rng);
      EXPECT_EQ(dual.pairing(p, q), pairing_oracle(g, p, q));
      EXPECT_EQ(dual.pairing(p, q), dual.pairing(q, p));
      EXPECT_EQ(pairing(dual, p, q), dual.pairing(p, q));
    }
  }
}

TEST(KillingDual, DifferentiationIsAdjointToMultiplication) {
  for (const char* type : {"A1", "A2", "B2"}) {
    const LieAlgebra g = algebra(type);
    const KillingDual dual(g);
    for (auto seed : seeds(200)) {
      SplitMix64 rng(seed);
      const auto dq = static_cast<unsigned>(rng.uniform(0, 2));
      const auto df = static_cast<unsigned>(rng.uniform(0, 2));
      const Poly q = random_poly(g.dim(), dq, 2, rng), f = random_poly(g.dim(), df, 2, rng);
      const Poly p = random_poly(g.dim(), dq + df, 3, rng);
      ASSERT_EQ(dual.pairing(dual.differentiate(q, p), f), dual.pairing(p, q * f)) << type;
    }
  }
}

TEST(KillingDual, UnattachedThrows) {
  const KillingDual dual;
  EXPECT_FALSE(dual.attached());
  EXPECT_THROW(dual.pairing(Poly::variable(3, 0), Poly::variable(3, 0)), ConfigError);
  EXPECT_THROW(dual.dual(Poly::variable(3, 0)), ConfigError);
}

TEST(LieDerivative, ActsOnLinearFormsByBracket) {
  for (const char* type : {"A1", "A2", "B2"}) {
    const LieAlgebra g = algebra(type);
    const KillingDual dual(g);
    for (auto seed : seeds(10)) {
      SplitMix64 rng(seed);
      const LieElement z = random_element(g.dim(), rng);
      for (std::size_t a = 0; a < g.dim(); ++a)
        EXPECT_EQ(lie_derivative(g, a, dual.linear_form(z)), dual.linear_form(g.bracket(g.basis_element(a), z)));
    }
  }
}

TEST(LieDerivative, IsADerivationAndKillsTraceSquare) {
  const LieAlgebra g = algebra("A2");
  for (auto seed : seeds(10)) {
    SplitMix64 rng(seed);
    const Poly p = random_poly(g.dim(), 2, 3, rng), q = random_poly(g.dim(), 1, 3, rng);
    const LieElement y = random_element(g.dim(), rng);
    EXPECT_EQ(lie_derivative(g, y, p * q), lie_derivative(g, y, p) * q + p * lie_derivative(g, y, q));
  }
  const LieAlgebra a1 = algebra("A1");
  const Poly p1 = Poly::parse("2*y0^2 + 2*y1*y2", 3);
  for (std::size_t a = 0; a < 3; ++a) EXPECT_TRUE(lie_derivative(a1, a, p1).is_zero());
}

TEST(PolySpace, EqualSpansHaveIdenticalBases) {
  SplitMix64 rng(5);
  std::vector<Poly> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_poly(4, 2, 3, rng));
  gens.push_back(gens[0] + Rational(3) * gens[1]);
  std::vector<Poly> reversed(gens.rbegin(), gens.rend());
  const PolySpace a = PolySpace::span(4, gens), b = PolySpace::span(4, reversed);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
  EXPECT_LE(a.dim(), 4U);
  for (const auto& p : gens) EXPECT_TRUE(a.contains(p));
  PolySpace c(4);
  EXPECT_TRUE(c.insert(gens[0]));
  EXPECT_FALSE(c.insert(Rational(2) * gens[0]));
  EXPECT_FALSE(c == a);
}

}  // namespace
}  // namespace sheetcalc
