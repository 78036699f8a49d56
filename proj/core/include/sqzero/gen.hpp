#pragma once

// Seeded generators of structured instances for property tests and fuzzing.
// All randomness comes from SplitMix64 substreams keyed by GenConfig::seed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqzero/lattice.hpp"
#include "sqzero/matrix.hpp"
#include "sqzero/squarezero.hpp"

namespace sqzero {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t first = 1;   // |I1|
  std::size_t middle = 1;  // |I2|
  std::size_t last = 1;    // |I3|
  std::size_t inner = 1;   // k, must not exceed |I2| for witness generation
  std::uint64_t max_entry = 3;
  std::uint64_t denominator = 1;
  double density = 0.5;
  /// Scatter I1, I2, I3 over the coordinates instead of using contiguous blocks.
  bool shuffle = false;

  std::size_t dimension() const { return first + middle + last; }
  /// Throws PreconditionError on an invalid configuration.
  void validate(bool for_witness) const;
};

struct GeneratedWitness {
  Matrix t;
  SquareZeroWitness witness;
  BlockForm form;
  Matrix left;   // |I1| x k
  Matrix right;  // k x |I3|
};

/// Samples L, R (every column of L and row of R nonzero), builds T on the block
/// template and the witness through construct_factors_from_form.
GeneratedWitness gen_witness(const GenConfig& cfg);

struct CommutatorDraw {
  std::optional<std::pair<Matrix, Matrix>> pair;  // (M, N), MN - NM >= 0
  std::size_t attempts = 0;
  IndexPartition layout;  // block layout the pair was drawn on
};

/// Rejection-samples square-zero M, N in strictly upper block form over the
/// layout, with the middle coordinates 2-colored per matrix so that M12 M23 = 0
/// and N12 N23 = 0 by construction, until M N - N M >= 0. Exhaustion after
/// max_rejects draws is reported through an empty `pair`.
CommutatorDraw gen_commutator_pair(const GenConfig& cfg, std::size_t max_rejects);

/// Deterministic, duplicate-free enumeration of all nonnegative n x n matrices
/// over `entries` with T^2 = 0. Matrices are grouped by (nonzero rows P,
/// nonzero columns Q) with P and Q disjoint, which is exactly the T^2 = 0
/// condition for nonnegative T; the candidate budget counts these structured
/// candidates.
class TinyEnumerator {
 public:
  static constexpr std::uint64_t kDefaultBudget = 10'000'000;

  /// Throws PreconditionError if n > 5 or an entry is negative, BudgetError if
  /// the number of candidates exceeds `budget`.
  TinyEnumerator(std::size_t n, std::vector<Rational> entries, std::uint64_t budget = kDefaultBudget);

  std::uint64_t candidates() const noexcept { return candidates_; }
  /// Next matrix in the stream, or nullopt when exhausted.
  std::optional<Matrix> next();
  /// Drains the stream.
  std::vector<Matrix> all();

 private:
  bool advance_layout();
  bool advance_values();
  bool current_is_exact() const;

  std::size_t n_;
  std::vector<Rational> values_;  // sorted distinct; zero excluded
  bool has_zero_ = false;
  std::uint64_t candidates_ = 0;

  std::vector<unsigned> roles_;  // per index: 0 none, 1 row (in P), 2 column (in Q)
  std::vector<std::size_t> p_, q_;
  std::vector<std::size_t> digits_;  // per P x Q cell, index into {0} + values_
  bool started_ = false;
  bool done_ = false;
};

}  // namespace sqzero
