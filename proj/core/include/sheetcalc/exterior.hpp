#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sheetcalc/chevalley.hpp"
#include "sheetcalc/polyring.hpp"
#include "sheetcalc/rational.hpp"

namespace sheetcalc {

/// Subset of basis labels {0..127}; the wedge Y_{s_1} ^ ... ^ Y_{s_k} with
/// s_1 < ... < s_k.
class LabelSet {
 public:
  static constexpr std::size_t kMaxLabels = 128;

  LabelSet() = default;
  static LabelSet of(std::span<const std::size_t> labels);

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1])); }
  bool empty() const { return (words_[0] | words_[1]) == 0; }
  bool intersects(const LabelSet& o) const { return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0; }
  /// Number of members strictly greater than i.
  std::size_t count_above(std::size_t i) const;
  std::vector<std::size_t> members() const;

  friend LabelSet operator|(LabelSet a, const LabelSet& b) {
    a.words_[0] |= b.words_[0];
    a.words_[1] |= b.words_[1];
    return a;
  }
  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  /// Lexicographic on the sorted member lists' bit patterns (low labels first).
  friend bool operator<(const LabelSet& a, const LabelSet& b) {
    if (a.words_[1] != b.words_[1]) return a.words_[1] < b.words_[1];
    return a.words_[0] < b.words_[0];
  }

 private:
  std::array<std::uint64_t, 2> words_{0, 0};
};

/// Sign of moving the concatenation S ++ T into increasing order; 0 when the
/// sets overlap.
int merge_sign(const LabelSet& s, const LabelSet& t);

/// Element of the exterior algebra of g over the Chevalley basis.
class ExtElement {
 public:
  using Terms = std::map<LabelSet, Rational>;

  ExtElement() = default;
  explicit ExtElement(std::size_t n) : n_(n) {}

  static ExtElement one(std::size_t n);
  /// Y_{i_1} ^ ... ^ Y_{i_k} in the given order (sign from sorting, 0 on repeats).
  static ExtElement basis_wedge(std::size_t n, std::span<const std::size_t> labels);
  /// x_1 ^ ... ^ x_k for arbitrary elements.
  static ExtElement wedge_of(std::span<const LieElement> xs);

  std::size_t dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Grade of a homogeneous element; -1 for zero or mixed grades.
  int grade() const;
  Rational coefficient(const LabelSet& s) const;
  void add_term(const LabelSet& s, const Rational& c);

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const Rational& s);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const Rational& s, ExtElement a) { return a *= s; }
  friend bool operator==(const ExtElement& a, const ExtElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

ExtElement wedge(const ExtElement& u, const ExtElement& v);
ExtElement wedge_power(const ExtElement& u, unsigned k);

/// dx in the second exterior power: (dx, u ^ v) = -B(x, [u, v]).
ExtElement coboundary(const LieAlgebra& g, const LieElement& x);

/// Killing form extended to the exterior algebra by Gram determinants;
/// different grades pair to 0.
Rational ext_pairing(const LieAlgebra& g, const ExtElement& u, const ExtElement& v);

/// Profile of the powers of dx.
struct PowerProfile {
  /// Largest k with (dx)^k != 0.
  std::size_t k_max = 0;
  /// (dx)^{k_max}; the scalar 1 for x = 0.
  ExtElement witness;
  /// orbit_dim(x) / 2, computed independently by exact rank.
  std::size_t half_orbit_dim = 0;
  /// witness is a nonzero multiple of w_1 ^ ... ^ w_{2k} for a basis w of [x, g].
  bool witness_in_image = false;
};

PowerProfile dx_power_profile(const LieAlgebra& g, const LieElement& x);

/// The algebra homomorphism from polynomial functions to the even exterior
/// algebra sending B(z, -) to -dz.
class GammaHom {
 public:
  explicit GammaHom(const LieAlgebra& g);
  ExtElement operator()(const Poly& p) const;
  /// Image of the coordinate function y_j.
  const ExtElement& coordinate_image(std::size_t j) const { return images_[j]; }

 private:
  std::size_t n_;
  std::vector<ExtElement> images_;
};

}  // namespace sheetcalc
