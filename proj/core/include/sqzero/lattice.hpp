#pragma once

// Standard subspaces of R^n (coordinate spans) and the three-block
// decomposition L1 + L2 + L3 of cube-zero and square-zero nonnegative matrices.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sqzero/matrix.hpp"

namespace sqzero {

/// Sorted, duplicate-free subset of {0, ..., ambient-1}. Identifies the
/// standard subspace spanned by the corresponding unit vectors.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts and validates; throws DimensionError on duplicates or out-of-range indices.
  IndexSet(std::size_t ambient, std::vector<std::size_t> indices);
  IndexSet(std::size_t ambient, std::initializer_list<std::size_t> indices)
      : IndexSet(ambient, std::vector<std::size_t>(indices)) {}

  static IndexSet all(std::size_t ambient);
  static IndexSet none(std::size_t ambient) { return IndexSet(ambient, std::vector<std::size_t>{}); }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

  bool contains(std::size_t i) const;
  bool is_subset_of(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::size_t> indices_;
};

/// Ordered triple (I1, I2, I3) partitioning {0, ..., n-1}.
class IndexPartition {
 public:
  IndexPartition() = default;
  /// Throws DimensionError unless the three sets share the ambient dimension,
  /// are pairwise disjoint and cover everything.
  IndexPartition(IndexSet first, IndexSet middle, IndexSet last);

  std::size_t ambient() const noexcept { return first_.ambient(); }
  const IndexSet& first() const noexcept { return first_; }
  const IndexSet& middle() const noexcept { return middle_; }
  const IndexSet& last() const noexcept { return last_; }

  /// I1 followed by I2 followed by I3: the permutation that exposes the block structure.
  std::vector<std::size_t> order() const;

  friend bool operator==(const IndexPartition&, const IndexPartition&) = default;

 private:
  IndexSet first_;
  IndexSet middle_;
  IndexSet last_;
};

/// A matrix supported only on I1 x I3 of a partition.
struct BlockForm {
  IndexPartition partition;
  Matrix block;  // |I1| x |I3|
};

/// Indices of the zero columns of a nonnegative square matrix; their span is
/// the null ideal {x : A|x| = 0}.
IndexSet null_ideal(const Matrix& a);

/// Coordinate complement within the ambient space.
IndexSet disjoint_complement(const IndexSet& s);

/// L1 = N(U), L2 = N(U)^d intersected with N(U^2), L3 = N(U^2)^d for
/// nonnegative U with U^3 = 0. Throws PreconditionError if U^3 != 0.
IndexPartition triple_decomposition(const Matrix& u);

/// Canonical form of a nonnegative T with T^2 = 0: I1 = nonzero rows,
/// I3 = nonzero columns, I2 = everything else (the largest possible middle).
/// Throws PreconditionError if T^2 != 0.
BlockForm product_form_decomposition(const Matrix& t);

/// n x n matrix with `form.block` on I1 x I3 and zeros elsewhere.
Matrix assemble_from_form(const BlockForm& form);

/// Indices of rows (resp. columns) containing a nonzero entry.
IndexSet nonzero_rows(const Matrix& a);
IndexSet nonzero_cols(const Matrix& a);

}  // namespace sqzero
