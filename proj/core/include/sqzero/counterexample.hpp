#pragma once

// The 4 x 4 rank-gap block (rank 3, nonnegative rank 4) and the 11 x 11 matrix built
// from it that satisfies the necessary commutator conditions without being a
// commutator of nonnegative square-zero matrices.

#include <array>
#include <cstdint>
#include <optional>

#include "sqzero/matrix.hpp"

namespace sqzero {

/// [[1,1,0,0],[1,0,1,0],[0,1,0,1],[0,0,1,1]].
Matrix build_rank_gap_block();

/// 11 x 11 with build_rank_gap_block() on rows 0..3 x columns 7..10 and zeros elsewhere.
Matrix build_counterexample();

using Vec4 = std::array<Rational, 4>;

// Which 3 x 3 minor of block + u v^T is evaluated (1-based: u1 <= u3, resp. u3 < u1).
enum class RankOneUpdateCase { kDropLastRowFirstColumn, kDropSecondRowLastColumn };

struct RankOneUpdateReport {
  RankOneUpdateCase which = RankOneUpdateCase::kDropLastRowFirstColumn;
  Rational formula_value;       // closed-form determinant of the selected 3x3 submatrix
  Rational direct_determinant;  // same submatrix, by elimination
  Rational lemma_value;         // det_rank_one_update on the same submatrix
  std::size_t rank_of_sum = 0;  // rank(block + u v^T)
  /// Both case formulas; the inactive one is only guaranteed >= 1 when u1 == u3.
  Rational drop_last_row_first_column_formula;
  Rational drop_second_row_last_column_formula;

  bool consistent() const {
    return formula_value == direct_determinant && formula_value == lemma_value &&
           formula_value >= Rational(1) && rank_of_sum >= 3;
  }
};

/// u1 <= u3 (chosen on ties): delete the first column and last row,
/// det = 1 + v2 u1 + v3 u2 + v4 (u3 - u1).
/// u3 < u1: delete the second row and last column,
/// det = 1 + v1 (u1 - u3) + v2 u3 + v3 u4.
/// (1-based component names.) Throws NegativeEntryError on negative input.
RankOneUpdateReport rank_one_update_check(const Vec4& u, const Vec4& v);

struct SearchOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t max_entry = 1;
  double density = 0.5;
  unsigned threads = 1;
};

struct SearchSummary {
  std::uint64_t trials = 0;
  std::uint64_t exact_hits = 0;             // trials with MN - NM == T
  std::optional<Rational> min_distance;     // over all trials; empty if trials == 0
  std::optional<std::uint64_t> first_hit;   // lowest trial index with distance 0
  bool integer_path = false;                // true if computed in 64-bit integer arithmetic
};

/// Samples nonnegative square-zero pairs (M, N) in strictly upper block form over
/// the canonical partition of T (middle coordinates 2-colored per matrix, integer
/// entries in [0, max_entry]) and records the minimum max-abs distance between
/// M N - N M and T. Trial t uses SplitMix64(seed, t); the summary does not depend
/// on the thread count. Statistical evidence only.
SearchSummary randomized_commutator_search(const Matrix& t, const SearchOptions& options);

}  // namespace sqzero
