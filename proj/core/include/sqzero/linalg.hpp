#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sqzero/matrix.hpp"

namespace sqzero {

/// Exact linear rank by Gaussian elimination over the rationals.
std::size_t rank(const Matrix& a);

/// Exact determinant; throws DimensionError for non-square input.
Rational det(const Matrix& a);

/// det(A + u v^T) evaluated through the matrix determinant lemma,
/// (1 + v^T A^{-1} u) det(A). Requires A invertible (SingularError otherwise)
/// and u, v of length A.rows().
Rational det_rank_one_update(const Matrix& a, std::span<const Rational> u,
                             std::span<const Rational> v);

/// Solves A X = B exactly for A with full column rank. Returns nullopt when A is
/// column-rank deficient or the system is inconsistent.
std::optional<Matrix> solve_full_column_rank(const Matrix& a, const Matrix& b);

/// A^k for square A, k >= 0.
Matrix power(const Matrix& a, unsigned k);

/// Pivot columns of the row echelon form; A[:, result] is a basis of the column space.
std::vector<std::size_t> pivot_columns(const Matrix& a);

/// Columns form a basis of {x : A x = 0}; cols() x (cols() - rank) matrix.
Matrix nullspace(const Matrix& a);

}  // namespace sqzero
