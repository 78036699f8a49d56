#include "sqzero/nnrank.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "sqzero/errors.hpp"
#include "sqzero/linalg.hpp"
#include "sqzero/rng.hpp"

namespace sqzero {

namespace {

Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).to_double();
  return out;
}

double max_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& l, const Eigen::MatrixXd& r) {
  if (a.size() == 0) return 0.0;
  return (a - l * r).cwiseAbs().maxCoeff();
}

// Columns of A as coordinates (alpha, beta) in the basis {A[:, b1], A[:, b2]}.
struct Plane {
  std::size_t b1 = 0, b2 = 0;
  std::size_t row_i = 0, row_j = 0;
  Rational minor;  // det of the basis restricted to rows i, j
};

std::array<Rational, 2> coordinates(const Matrix& a, const Plane& p, std::size_t col) {
  const Rational& x = a(p.row_i, col);
  const Rational& y = a(p.row_j, col);
  const Rational alpha = (x * a(p.row_j, p.b2) - y * a(p.row_i, p.b2)) / p.minor;
  const Rational beta = (a(p.row_i, p.b1) * y - a(p.row_j, p.b1) * x) / p.minor;
  return {alpha, beta};
}

Rational cross(const std::array<Rational, 2>& p, const std::array<Rational, 2>& q) {
  return p[0] * q[1] - p[1] * q[0];
}

std::optional<Plane> find_plane(const Matrix& a, std::size_t b1) {
  for (std::size_t b2 = b1 + 1; b2 < a.cols(); ++b2) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = i + 1; j < a.rows(); ++j) {
        Rational m = a(i, b1) * a(j, b2) - a(j, b1) * a(i, b2);
        if (!m.is_zero()) return Plane{b1, b2, i, j, std::move(m)};
      }
    }
  }
  return std::nullopt;
}

// Rationalizes the columns of `factor` (each scaled to unit maximum, tiny entries
// snapped to zero, zero columns dropped) and solves factor * X = target exactly.
std::optional<Factorization> snap_left(const Matrix& target, const Eigen::MatrixXd& factor,
                                       std::uint64_t max_den) {
  std::vector<Eigen::VectorXd> cols;
  for (Eigen::Index c = 0; c < factor.cols(); ++c) {
    const double top = factor.col(c).maxCoeff();
    if (!(top > 1e-9)) continue;
    cols.push_back(factor.col(c) / top);
  }
  Matrix left(target.rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t i = 0; i < target.rows(); ++i) {
      const double v = cols[c](static_cast<Eigen::Index>(i));
      left(i, c) = v < 1e-7 ? Rational(0) : Rational::approximate(v, max_den);
    }
  }
  auto right = solve_full_column_rank(left, target);
  if (!right || !right->is_nonnegative()) return std::nullopt;
  Factorization f{std::move(left), std::move(*right)};
  if (!f.verifies(target)) return std::nullopt;
  return f;
}

// For k == rank(target): every exact factor lies in the column space, so each
// column is snapped as C g with C a column basis of target and g restricted to
// reproduce the near-zero pattern exactly. The other factor is then solved for.
std::optional<Factorization> snap_in_column_space(const Matrix& target, const Eigen::MatrixXd& factor,
                                                  std::uint64_t max_den) {
  const std::vector<std::size_t> pivots = pivot_columns(target);
  if (pivots.size() != static_cast<std::size_t>(factor.cols())) return std::nullopt;
  std::vector<std::size_t> all_rows(target.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  const Matrix basis = target.submatrix(all_rows, pivots);

  std::vector<std::size_t> basis_cols(pivots.size());
  std::iota(basis_cols.begin(), basis_cols.end(), 0);
  const Eigen::MatrixXd basis_d = to_eigen(basis);

  Matrix left(target.rows(), pivots.size());
  for (Eigen::Index c = 0; c < factor.cols(); ++c) {
    const double top = factor.col(c).maxCoeff();
    if (!(top > 1e-9)) return std::nullopt;
    const Eigen::VectorXd col = factor.col(c) / top;
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < target.rows(); ++i)
      if (col(static_cast<Eigen::Index>(i)) < 1e-7) zeros.push_back(i);
    const Matrix free = zeros.empty() ? Matrix::identity(pivots.size())
                                      : nullspace(basis.submatrix(zeros, basis_cols));
    if (free.cols() == 0) return std::nullopt;
    const Eigen::MatrixXd free_d = to_eigen(free);
    const Eigen::VectorXd y = (basis_d * free_d).colPivHouseholderQr().solve(col);
    Matrix coeff(free.cols(), 1);
    for (std::size_t t = 0; t < free.cols(); ++t) coeff(t, 0) = Rational::approximate(y(static_cast<Eigen::Index>(t)), max_den);
    const Matrix column = matmul(basis, matmul(free, coeff));
    if (!column.is_nonnegative() || column.is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < target.rows(); ++i) left(i, static_cast<std::size_t>(c)) = column(i, 0);
  }
  auto right = solve_full_column_rank(left, target);
  if (!right || !right->is_nonnegative()) return std::nullopt;
  Factorization f{std::move(left), std::move(*right)};
  if (!f.verifies(target)) return std::nullopt;
  return f;
}

// Restricts a to its nonzero rows and columns.
struct Compact {
  IndexSet rows, cols;
  Matrix core;
};

Compact compact(const Matrix& a) {
  Compact c{nonzero_rows(a), nonzero_cols(a), {}};
  c.core = a.submatrix(c.rows.indices(), c.cols.indices());
  return c;
}

Factorization embed(const Factorization& f, const Compact& c, std::size_t m, std::size_t n) {
  const std::size_t k = f.inner();
  Matrix left(m, k), right(k, n);
  for (std::size_t i = 0; i < c.rows.size(); ++i)
    for (std::size_t t = 0; t < k; ++t) left(c.rows[i], t) = f.left(i, t);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t j = 0; j < c.cols.size(); ++j) right(t, c.cols[j]) = f.right(t, j);
  return Factorization{std::move(left), std::move(right)};
}

}  // namespace

bool Factorization::verifies(const Matrix& a) const {
  if (left.rows() != a.rows() || right.cols() != a.cols() || left.cols() != right.rows()) return false;
  return left.is_nonnegative() && right.is_nonnegative() && matmul(left, right) == a;
}

Factorization rank2_exact_factorization(const Matrix& a) {
  a.require_nonnegative("rank2_exact_factorization");
  const std::size_t r = rank(a);
  if (r > 2) throw PreconditionError("rank2_exact_factorization needs rank <= 2, got " + std::to_string(r));
  const IndexSet nz = nonzero_cols(a);
  if (r == 0) return Factorization{Matrix(a.rows(), 0), Matrix(0, a.cols())};

  if (r == 1) {
    const std::size_t c = nz[0];
    std::size_t pivot = 0;
    while (a(pivot, c).is_zero()) ++pivot;
    Matrix left(a.rows(), 1), right(1, a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) left(i, 0) = a(i, c);
    for (std::size_t j = 0; j < a.cols(); ++j) right(0, j) = a(pivot, j) / a(pivot, c);
    return Factorization{std::move(left), std::move(right)};
  }

  const Plane plane = *find_plane(a, nz[0]);
  std::vector<std::array<Rational, 2>> coords(a.cols());
  for (std::size_t j : nz) coords[j] = coordinates(a, plane, j);

  // The columns are nonnegative, so their cone is pointed and the angular order
  // is total; the two extreme rays are the cross-product minimum and maximum.
  std::size_t lo = nz[0], hi = nz[0];
  for (std::size_t j : nz) {
    if (cross(coords[lo], coords[j]).sign() < 0) lo = j;
    if (cross(coords[hi], coords[j]).sign() > 0) hi = j;
  }
  if (hi < lo) std::swap(lo, hi);
  const Rational d = cross(coords[lo], coords[hi]);

  Matrix left(a.rows(), 2), right(2, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    left(i, 0) = a(i, lo);
    left(i, 1) = a(i, hi);
  }
  for (std::size_t j : nz) {
    right(0, j) = cross(coords[j], coords[hi]) / d;
    right(1, j) = cross(coords[lo], coords[j]) / d;
  }
  Factorization f{std::move(left), std::move(right)};
  if (!f.verifies(a)) throw Error("rank2_exact_factorization: internal verification failed");
  return f;
}

NmfResult nmf_heuristic(const Matrix& a, const NmfOptions& options) {
  if (options.inner == 0) throw PreconditionError("nmf_heuristic needs inner dimension >= 1");
  a.require_nonnegative("nmf_heuristic");
  const Eigen::MatrixXd target = to_eigen(a);
  const auto m = static_cast<Eigen::Index>(a.rows());
  const auto n = static_cast<Eigen::Index>(a.cols());
  const auto k = static_cast<Eigen::Index>(options.inner);

  NmfResult best;
  if (k >= std::min(m, n)) {
    // Identity embedding through the smaller side.
    best.left = Eigen::MatrixXd::Zero(m, k);
    best.right = Eigen::MatrixXd::Zero(k, n);
    if (m <= n) {
      best.left.leftCols(m) = Eigen::MatrixXd::Identity(m, m);
      best.right.topRows(m) = target;
    } else {
      best.left.leftCols(n) = target;
      best.right.topRows(n) = Eigen::MatrixXd::Identity(n, n);
    }
    best.residual = max_residual(target, best.left, best.right);
    best.restart_residuals = {best.residual};
    return best;
  }

  const double scale = target.size() ? std::sqrt(std::max(target.mean(), 1e-12) / static_cast<double>(k)) : 1.0;
  best.residual = std::numeric_limits<double>::infinity();
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
  best.restart_residuals.assign(restarts, std::numeric_limits<double>::infinity());

  for (std::size_t rs = 0; rs < restarts; ++rs) {
    SplitMix64 rng(options.seed, rs);
    Eigen::MatrixXd l(m, k), r(k, n);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index t = 0; t < k; ++t) l(i, t) = rng.unit() * scale;
    for (Eigen::Index t = 0; t < k; ++t)
      for (Eigen::Index j = 0; j < n; ++j) r(t, j) = rng.unit() * scale;

    double res = max_residual(target, l, r);
    for (std::size_t it = 0; it < options.iterations && res > options.tolerance; ++it) {
      const Eigen::MatrixXd lta = l.transpose() * target;
      const Eigen::MatrixXd ltl = l.transpose() * l;
      for (Eigen::Index t = 0; t < k; ++t) {
        if (ltl(t, t) <= 1e-300) continue;
        r.row(t) = (r.row(t) + (lta.row(t) - ltl.row(t) * r) / ltl(t, t)).cwiseMax(0.0);
      }
      const Eigen::MatrixXd art = target * r.transpose();
      const Eigen::MatrixXd rrt = r * r.transpose();
      for (Eigen::Index t = 0; t < k; ++t) {
        if (rrt(t, t) <= 1e-300) continue;
        l.col(t) = (l.col(t) + (art.col(t) - l * rrt.col(t)) / rrt(t, t)).cwiseMax(0.0);
      }
      if (it % 10 == 9) res = max_residual(target, l, r);
    }
    res = max_residual(target, l, r);
    best.restart_residuals[rs] = res;
    // Strict comparison keeps the lowest restart index among ties.
    if (res < best.residual) {
      best.residual = res;
      best.best_restart = rs;
      best.left = std::move(l);
      best.right = std::move(r);
    }
  }
  return best;
}

std::optional<Factorization> rationalize_factorization(const Matrix& a, const Eigen::MatrixXd& left,
                                                       const Eigen::MatrixXd& right,
                                                       std::uint64_t max_denominator) {
  if (static_cast<std::size_t>(left.rows()) != a.rows() ||
      static_cast<std::size_t>(right.cols()) != a.cols() || left.cols() != right.rows()) {
    throw DimensionError("rationalize_factorization: factor shapes do not match the matrix");
  }
  const Matrix at = a.transpose();
  const Eigen::MatrixXd right_t = right.transpose();
  for (std::uint64_t den = 10; den <= max_denominator; den *= 10) {
    if (auto f = snap_left(a, left, den)) return f;
    if (auto g = snap_left(at, right_t, den)) {
      return Factorization{g->right.transpose(), g->left.transpose()};
    }
    if (auto f = snap_in_column_space(a, left, den)) return f;
    if (auto g = snap_in_column_space(at, right_t, den)) {
      return Factorization{g->right.transpose(), g->left.transpose()};
    }
  }
  return std::nullopt;
}

const char* to_string(LowerCertificate c) {
  switch (c) {
    case LowerCertificate::kLinearRank: return "linear-rank";
    case LowerCertificate::kRectangleCover: return "rectangle-cover";
  }
  return "?";
}

const char* to_string(UpperCertificate c) {
  switch (c) {
    case UpperCertificate::kZeroMatrix: return "zero-matrix";
    case UpperCertificate::kRankAtMostTwo: return "rank-at-most-two";
    case UpperCertificate::kRowFactorization: return "nonzero-rows";
    case UpperCertificate::kColumnFactorization: return "nonzero-columns";
    case UpperCertificate::kHeuristic: return "heuristic-rationalized";
  }
  return "?";
}

NNRankBounds nonneg_rank_bounds(const Matrix& a, const BoundsOptions& options) {
  a.require_nonnegative("nonneg_rank_bounds");
  const Compact c = compact(a);
  const Matrix& core = c.core;

  NNRankBounds b;
  b.linear_rank = rank(core);
  b.lower = b.linear_rank;
  b.lower_certificate = LowerCertificate::kLinearRank;

  Factorization f;
  if (b.linear_rank == 0) {
    f = Factorization{Matrix(core.rows(), 0), Matrix(0, core.cols())};
    b.upper_certificate = UpperCertificate::kZeroMatrix;
  } else if (b.linear_rank <= 2) {
    f = rank2_exact_factorization(core);
    b.upper_certificate = UpperCertificate::kRankAtMostTwo;
  } else if (core.rows() <= core.cols()) {
    f = Factorization{Matrix::identity(core.rows()), core};
    b.upper_certificate = UpperCertificate::kRowFactorization;
  } else {
    f = Factorization{core, Matrix::identity(core.cols())};
    b.upper_certificate = UpperCertificate::kColumnFactorization;
  }
  b.upper = f.inner();

  if (b.lower < b.upper) {
    CoverOptions cover_opts;
    cover_opts.time_limit = options.cover_time_limit;
    CoverResult cover = rectangle_cover(support_pattern(core), cover_opts);
    if (cover.optimal && cover.size > b.lower) {
      b.lower = cover.size;
      b.lower_certificate = LowerCertificate::kRectangleCover;
    }
    b.cover = std::move(cover);
  }

  for (std::size_t k = b.lower; k < b.upper && options.nmf_restarts > 0; ++k) {
    NmfOptions nmf;
    nmf.inner = k;
    nmf.restarts = options.nmf_restarts;
    nmf.iterations = options.nmf_iterations;
    nmf.seed = options.seed;
    const NmfResult approx = nmf_heuristic(core, nmf);
    if (!(approx.residual < 1e-6)) continue;
    if (auto exact = rationalize_factorization(core, approx.left, approx.right)) {
      if (exact->inner() < b.upper) {
        f = std::move(*exact);
        b.upper = f.inner();
        b.upper_certificate = UpperCertificate::kHeuristic;
      }
      break;
    }
  }

  b.factorization = embed(f, c, a.rows(), a.cols());
  return b;
}

}  // namespace sqzero
