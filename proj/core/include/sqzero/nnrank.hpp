#pragma once

// Certified bounds on the nonnegative rank: the smallest k with A = L R,
// L (m x k) and R (k x n) entrywise nonnegative.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sqzero/lattice.hpp"
#include "sqzero/matrix.hpp"

namespace sqzero {

/// Entrywise nonzero indicator of a matrix.
class SupportPattern {
 public:
  SupportPattern() = default;
  SupportPattern(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v = true) { cells_[r * cols_ + c] = v ? 1 : 0; }
  std::size_t count() const;
  /// Column indices with a true entry in row r.
  std::vector<std::size_t> row_support(std::size_t r) const;

  friend bool operator==(const SupportPattern&, const SupportPattern&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<unsigned char> cells_;
};

/// An all-true combinatorial rectangle rowSet x colSet of a support pattern.
struct Rectangle {
  IndexSet rows;
  IndexSet cols;
  std::size_t area() const { return rows.size() * cols.size(); }
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

SupportPattern support_pattern(const Matrix& a);

/// All inclusion-maximal all-true rectangles, obtained by closing the row
/// supports under intersection. Sorted by area descending, then lexicographically.
std::vector<Rectangle> maximal_rectangles(const SupportPattern& b);

struct CoverOptions {
  /// Wall-clock budget for the branch-and-bound; nullopt means unbounded.
  std::optional<std::chrono::duration<double>> time_limit;
};

struct CoverResult {
  std::size_t size = 0;            // best cover found
  bool optimal = true;             // false if the search hit the time limit
  std::vector<Rectangle> cover;    // an explicit cover of `size` rectangles
  std::uint64_t nodes = 0;         // branch-and-bound nodes explored
  std::size_t maximal_rectangles = 0;
};

/// Minimum number of all-true rectangles covering every true cell of `b`.
/// Exact (optimal == true) unless the time limit interrupts the search.
CoverResult rectangle_cover(const SupportPattern& b, const CoverOptions& options = {});

/// Convenience wrapper returning only the exact cover number (no time limit).
std::size_t rectangle_cover_number(const SupportPattern& b);

/// Exact nonnegative factorization A = L R.
struct Factorization {
  Matrix left;   // m x k
  Matrix right;  // k x n
  std::size_t inner() const { return left.cols(); }
  /// True iff both factors are nonnegative and left * right == a exactly.
  bool verifies(const Matrix& a) const;
};

/// Nonnegative factorization of inner dimension rank(A) for nonnegative A of
/// rank at most 2. The columns of L are columns of A spanning the extreme rays
/// of the cone generated by A's columns. Throws PreconditionError if rank(A) > 2.
Factorization rank2_exact_factorization(const Matrix& a);

struct NmfOptions {
  std::size_t inner = 1;
  std::size_t restarts = 8;
  std::size_t iterations = 2000;
  std::uint64_t seed = 0;
  /// Stop a restart early once the max-abs residual falls below this.
  double tolerance = 1e-12;
};

struct NmfResult {
  Eigen::MatrixXd left;
  Eigen::MatrixXd right;
  double residual = 0.0;        // max |A - LR| entrywise
  std::size_t best_restart = 0;
  std::vector<double> restart_residuals;
};

/// Hierarchical alternating least squares with random nonnegative starts.
/// Deterministic for a fixed seed: restart r draws from SplitMix64(seed, r) and
/// the best restart is chosen by (residual, index).
NmfResult nmf_heuristic(const Matrix& a, const NmfOptions& options);

/// Snaps a floating factorization to a candidate exact one: columns of L are
/// scaled to unit maximum and rationalized, then R is solved for exactly (and
/// symmetrically with the roles swapped). Returns a factorization only if it
/// verifies exactly over the rationals.
std::optional<Factorization> rationalize_factorization(const Matrix& a, const Eigen::MatrixXd& left,
                                                       const Eigen::MatrixXd& right,
                                                       std::uint64_t max_denominator = 1000000);

enum class LowerCertificate { kLinearRank, kRectangleCover };
enum class UpperCertificate { kZeroMatrix, kRankAtMostTwo, kRowFactorization, kColumnFactorization, kHeuristic };

const char* to_string(LowerCertificate c);
const char* to_string(UpperCertificate c);

struct NNRankBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t linear_rank = 0;
  LowerCertificate lower_certificate = LowerCertificate::kLinearRank;
  /// Present when a rectangle cover search ran; its `cover` attains `size`, and
  /// when `optimal` no cover with fewer rectangles exists.
  std::optional<CoverResult> cover;
  UpperCertificate upper_certificate = UpperCertificate::kZeroMatrix;
  Factorization factorization;  // inner() == upper, verifies exactly
  bool exact() const { return lower == upper; }
};

struct BoundsOptions {
  std::optional<std::chrono::duration<double>> cover_time_limit;
  std::size_t nmf_restarts = 8;
  std::size_t nmf_iterations = 3000;
  std::uint64_t seed = 0;
};

/// Certified interval [lower, upper] containing rank+(A). Throws
/// NegativeEntryError on negative input.
NNRankBounds nonneg_rank_bounds(const Matrix& a, const BoundsOptions& options = {});

}  // namespace sqzero
