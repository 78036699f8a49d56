#pragma once

// Products and commutators of nonnegative square-zero matrices.
//
// For nonnegative n x n T the following are equivalent:
//   (i)   T = M N with M, N >= 0 and M^2 = N^2 = N M = 0;
//   (ii)  T = U^2 with U >= 0 and U^3 = 0;
//   (iii) T is supported on I1 x I3 of a partition (I1, I2, I3) of the
//         coordinates with rank+(T[I1, I3]) <= |I2|.
// A nonnegative commutator T = M N - N M of nonnegative square-zero M, N
// satisfies the weaker condition with rank in place of rank+.

#include <optional>
#include <string>
#include <vector>

#include "sqzero/lattice.hpp"
#include "sqzero/matrix.hpp"
#include "sqzero/nnrank.hpp"

namespace sqzero {

struct SquareZeroWitness {
  Matrix m;
  Matrix n;
  Matrix u;  // m + n
};

/// Outcome of checking the product identities T = MN, M^2 = N^2 = NM = 0 and
/// nonnegativity of the factors.
struct WitnessCheck {
  bool shapes_agree = true;
  bool factors_nonnegative = true;
  bool product_equals_t = true;   // M N == T
  bool m_square_zero = true;      // M^2 == 0
  bool n_square_zero = true;      // N^2 == 0
  bool reverse_product_zero = true;  // N M == 0
  bool u_is_sum = true;           // U == M + N

  bool ok() const {
    return shapes_agree && factors_nonnegative && product_equals_t && m_square_zero &&
           n_square_zero && reverse_product_zero && u_is_sum;
  }
  /// Human-readable names of the violated identities.
  std::vector<std::string> violations() const;
};

WitnessCheck verify_witness(const SquareZeroWitness& w, const Matrix& t);

/// Builds M = L on I1 x (first k of I2) and N = R on (first k of I2) x I3.
/// Throws BudgetError if k > |I2|, PreconditionError if L R != block,
/// NegativeEntryError on negative factors.
SquareZeroWitness construct_factors_from_form(const BlockForm& form, const Matrix& left,
                                              const Matrix& right);

/// U = M + N, checked to satisfy U^2 = M N and U^3 = 0.
/// Throws PreconditionError if the witness identities are violated.
Matrix cube_zero_root(const SquareZeroWitness& w);

struct CubeZeroForm {
  BlockForm form;   // T = U^2 in block form over triple_decomposition(U)
  Matrix u12;       // U[I1, I2]
  Matrix u23;       // U[I2, I3]
};

/// Block form of T = U^2 for nonnegative cube-zero U, with T[I1, I3] = U12 U23.
CubeZeroForm form_from_cube_zero(const Matrix& u);

enum class Answer { kYes, kNo, kUnknown };
const char* to_string(Answer a);

struct Verdict {
  Answer answer = Answer::kUnknown;
  /// Present iff answer == kYes; verifies against T.
  std::optional<SquareZeroWitness> witness;
  /// Obstruction (for kNo) or the open interval (for kUnknown).
  std::string reason;
  /// Canonical block form; absent when T^2 != 0.
  std::optional<BlockForm> form;
  /// rank+ bounds of the T[I1, I3] block; absent when T^2 != 0.
  std::optional<NNRankBounds> bounds;
};

/// Decides whether T is a product M N of nonnegative M, N with M^2 = N^2 = N M = 0.
Verdict decide_square_zero_product(const Matrix& t, const BoundsOptions& options = {});

struct CommutatorReport {
  Matrix commutator;  // M N - N M
  bool nonnegative = false;
  // The remaining fields are populated only when `nonnegative` holds.
  bool m_annihilates_left = false;   // M T == 0
  bool m_annihilates_right = false;  // T M == 0
  bool n_annihilates_left = false;   // N T == 0
  bool n_annihilates_right = false;  // T N == 0
  bool sum_cube_zero = false;        // (M + N)^3 == 0
  bool block_pattern = false;        // T supported on I1 x I3
  bool block_factorizes = false;     // T[I1, I3] == (M12 - N12)(M23 + N23)
  std::optional<IndexPartition> partition;  // triple_decomposition(M + N)
  Matrix block;                      // T[I1, I3]
  std::size_t block_rank = 0;
  std::size_t middle_dim = 0;        // |I2|
  bool necessary_condition = false;  // all of the above and block_rank <= middle_dim

  bool annihilation() const {
    return m_annihilates_left && m_annihilates_right && n_annihilates_left && n_annihilates_right;
  }
};

/// Analyzes C = M N - N M for nonnegative square-zero M, N. A negative entry in C
/// is reported (nonnegative == false), not thrown. Throws PreconditionError if
/// M^2 != 0 or N^2 != 0, NegativeEntryError on negative inputs.
CommutatorReport commutator_analysis(const Matrix& m, const Matrix& n);

struct NecessaryCheck {
  bool holds = false;
  std::string reason;
  std::optional<BlockForm> form;  // canonical form when T^2 == 0
  std::size_t block_rank = 0;
  std::size_t middle_dim = 0;
};

/// T^2 == 0 and rank(block) <= |I2| for the canonical partition: the necessary
/// condition for T to be a commutator of nonnegative square-zero matrices.
NecessaryCheck necessary_condition_check(const Matrix& t);

/// Where T sits relative to the necessary and sufficient conditions for being a
/// commutator M N - N M of nonnegative square-zero matrices. A product witness
/// (N M = 0) is itself a commutator witness, so kProductForm is sufficient.
enum class CommutatorStatus { kNecessaryFails, kProductForm, kGap, kUndetermined };
const char* to_string(CommutatorStatus s);

struct CommutatorClassification {
  CommutatorStatus status = CommutatorStatus::kUndetermined;
  NecessaryCheck necessary;
  Verdict product;
};

CommutatorClassification classify_commutator_candidate(const Matrix& t,
                                                        const BoundsOptions& options = {});

}  // namespace sqzero
