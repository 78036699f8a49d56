#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sqzero/matrix.hpp"

namespace sqzero::testing {

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 5) {
  std::uniform_int_distribution<long> num(lo * max_den, hi * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  long n = num(rng);
  // keep the value in [lo, hi]
  n = std::clamp(n, lo * d, hi * d);
  return Rational(n, d);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi,
                            long max_den = 1, double density = 1.0) {
  Matrix m(rows, cols);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m(i, j) = random_rational(rng, lo, hi, max_den);
  return m;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Matrix permutation_matrix(const std::vector<std::size_t>& p) {
  Matrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, p[i]) = 1;
  return m;
}

/// Determinant by Laplace expansion along the first row; independent of elimination.
inline Rational cofactor_det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return a(0, 0);
  Rational total;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const Rational minor = cofactor_det(a.submatrix(rows, cols));
    total += (j % 2 == 0 ? a(0, j) : -a(0, j)) * minor;
  }
  return total;
}

}  // namespace sqzero::testing
