#include "sqzero/linalg.hpp"

#include <utility>
#include <vector>

#include "sqzero/errors.hpp"

namespace sqzero {

namespace {

// Row-reduces `m` in place to row echelon form over the first `pivot_cols`
// columns, choosing the first nonzero entry in each column as pivot. Returns
// the pivot column of each pivot row and the number of row swaps performed.
struct Echelon {
  std::vector<std::size_t> pivot_cols;
  std::size_t swaps = 0;
};

Echelon row_reduce(Matrix& m, std::size_t pivot_cols, bool reduced) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      ++out.swaps;
    }
    const Rational pivot = m(row, col);
    if (reduced) {
      for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= pivot;
    }
    const std::size_t first = reduced ? 0 : row + 1;
    for (std::size_t r = first; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = reduced ? m(r, col) : m(r, col) / pivot;
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  Matrix work = a;
  return row_reduce(work, work.cols(), false).pivot_cols.size();
}

Rational det(const Matrix& a) {
  if (!a.is_square()) {
    throw DimensionError("determinant of non-square " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " matrix");
  }
  Matrix work = a;
  const Echelon e = row_reduce(work, work.cols(), false);
  if (e.pivot_cols.size() < work.rows()) return Rational(0);
  Rational d = (e.swaps % 2 == 0) ? Rational(1) : Rational(-1);
  for (std::size_t i = 0; i < work.rows(); ++i) d *= work(i, i);
  return d;
}

Rational det_rank_one_update(const Matrix& a, std::span<const Rational> u,
                             std::span<const Rational> v) {
  if (!a.is_square()) throw DimensionError("determinant lemma needs a square matrix");
  if (u.size() != a.rows() || v.size() != a.rows()) {
    throw DimensionError("determinant lemma vectors must have length " + std::to_string(a.rows()));
  }
  const Rational base = det(a);
  if (base.is_zero()) {
    throw SingularError("determinant lemma requires an invertible matrix; use det(A + u v^T)");
  }
  auto x = solve_full_column_rank(a, Matrix::column(u));
  // Invertible A always yields a unique solution.
  Rational quad(1);
  for (std::size_t i = 0; i < v.size(); ++i) quad += v[i] * (*x)(i, 0);
  return quad * base;
}

std::optional<Matrix> solve_full_column_rank(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("solve: right-hand side has " + std::to_string(b.rows()) +
                         " rows, expected " + std::to_string(a.rows()));
  }
  const std::size_t k = a.cols();
  Matrix aug(a.rows(), k + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, k + j) = b(i, j);
  }
  const Echelon e = row_reduce(aug, k, true);
  if (e.pivot_cols.size() < k) return std::nullopt;
  // Rows below the pivots must be zero on the right-hand side.
  for (std::size_t i = k; i < aug.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!aug(i, k + j).is_zero()) return std::nullopt;
    }
  }
  Matrix x(k, b.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, k + j);
  return x;
}

std::vector<std::size_t> pivot_columns(const Matrix& a) {
  Matrix work = a;
  return row_reduce(work, work.cols(), false).pivot_cols;
}

Matrix nullspace(const Matrix& a) {
  Matrix work = a;
  const Echelon e = row_reduce(work, work.cols(), true);
  std::vector<char> is_pivot(a.cols(), 0);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = 1;
  Matrix basis(a.cols(), a.cols() - e.pivot_cols.size());
  std::size_t out = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(f, out) = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) basis(e.pivot_cols[i], out) = -work(i, f);
    ++out;
  }
  return basis;
}

Matrix power(const Matrix& a, unsigned k) {
  if (!a.is_square()) throw DimensionError("power of a non-square matrix");
  Matrix result = Matrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) result = matmul(result, a);
  return result;
}

}  // namespace sqzero
