#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "sqzero/rational.hpp"

namespace sqzero {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise literal, e.g. Matrix{{1, 0}, {0, 1}}. All rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  /// n x n matrix with a single one at (row, col), 0-based.
  static Matrix unit(std::size_t n, std::size_t row, std::size_t col);
  static Matrix column(std::span<const Rational> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const;

  std::span<const Rational> entries() const noexcept { return entries_; }
  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }

  Matrix transpose() const;
  /// Rows `row_idx` and columns `col_idx`, in the given order.
  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  bool is_zero() const;
  bool is_nonnegative() const;
  /// First negative entry in row-major order, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_negative() const;

  /// Throws NegativeEntryError naming `what` if any entry is negative.
  void require_nonnegative(const char* what) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact product; throws DimensionError unless a.cols() == b.rows().
Matrix matmul(const Matrix& a, const Matrix& b);

/// Max over entries of |a_ij - b_ij|; throws DimensionError on shape mismatch.
Rational max_abs_difference(const Matrix& a, const Matrix& b);

/// P * A * P^T for the permutation sending new position p to old index order[p].
Matrix permute_symmetric(const Matrix& a, std::span<const std::size_t> order);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace sqzero
