#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sheetcalc/rational.hpp"

namespace sheetcalc {

/// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination on integer-scaled rows.
std::size_t rank(const Matrix& m);

/// Exact determinant by Bareiss elimination. Requires a square matrix.
Rational determinant(const Matrix& m);

/// Throws std::domain_error when the matrix is singular.
Matrix inverse(const Matrix& m);

/// Reduced row echelon form; `pivots` receives pivot column indices.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of the column space, taken from the pivot columns of `m`.
std::vector<std::vector<Rational>> column_space_basis(const Matrix& m);

/// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

/// Echelon basis of a subspace of sparse vectors indexed by `Key`.
///
/// Keys are ordered by `Compare`; the first key of a row is its pivot. The
/// basis is kept in reduced form at all times: every pivot is 1 and appears
/// in no other row, so two spans are equal iff their bases are identical.
template <class Key, class Compare = std::less<Key>>
class SparseEchelon {
 public:
  using Vector = std::map<Key, Rational, Compare>;

  /// Adds `v` to the span; returns true when the dimension grew.
  bool insert(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    const Rational lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    const Key pivot = v.begin()->first;
    for (auto& row : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Rational f = it->second;
      axpy(row, v, -f);
    }
    pivots_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  /// Fully reduces `v` against the basis in place.
  void reduce(Vector& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const Key here = it->first;
      const Rational f = it->second;
      axpy(v, rows_[p->second], -f);
      it = v.upper_bound(here);
    }
  }

  bool contains(Vector v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t dim() const { return rows_.size(); }

  /// Rows sorted by pivot in `Compare` order.
  std::vector<Vector> sorted_rows() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, idx] : pivots_) out.push_back(rows_[idx]);
    return out;
  }

 private:
  static void axpy(Vector& y, const Vector& x, const Rational& a) {
    for (const auto& [k, c] : x) {
      auto [it, inserted] = y.try_emplace(k, 0);
      it->second += a * c;
      if (it->second == 0) y.erase(it);
    }
  }

  std::vector<Vector> rows_;
  std::map<Key, std::size_t, Compare> pivots_;
};

}  // namespace sheetcalc
