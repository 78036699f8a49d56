#include "sqzero/lattice.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "sqzero/errors.hpp"
#include "sqzero/linalg.hpp"

namespace sqzero {

IndexSet::IndexSet(std::size_t ambient, std::vector<std::size_t> indices)
    : ambient_(ambient), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw DimensionError("index set contains duplicates");
  }
  if (!indices_.empty() && indices_.back() >= ambient_) {
    throw DimensionError("index " + std::to_string(indices_.back()) + " outside ambient dimension " +
                         std::to_string(ambient_));
  }
}

IndexSet IndexSet::all(std::size_t ambient) {
  std::vector<std::size_t> idx(ambient);
  for (std::size_t i = 0; i < ambient; ++i) idx[i] = i;
  return IndexSet(ambient, std::move(idx));
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

IndexSet IndexSet::minus(const IndexSet& other) const {
  std::vector<std::size_t> out;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(out));
  return IndexSet(ambient_, std::move(out));
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  std::vector<std::size_t> out;
  std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(out));
  return IndexSet(ambient_, std::move(out));
}

IndexPartition::IndexPartition(IndexSet first, IndexSet middle, IndexSet last)
    : first_(std::move(first)), middle_(std::move(middle)), last_(std::move(last)) {
  const std::size_t n = first_.ambient();
  if (middle_.ambient() != n || last_.ambient() != n) {
    throw DimensionError("partition blocks have different ambient dimensions");
  }
  if (first_.size() + middle_.size() + last_.size() != n) {
    throw DimensionError("partition blocks do not cover {0.." + std::to_string(n) + "}");
  }
  std::vector<char> seen(n, 0);
  for (const IndexSet* s : {&first_, &middle_, &last_}) {
    for (std::size_t i : *s) {
      if (seen[i]) throw DimensionError("partition blocks overlap at index " + std::to_string(i));
      seen[i] = 1;
    }
  }
}

std::vector<std::size_t> IndexPartition::order() const {
  std::vector<std::size_t> out;
  out.reserve(ambient());
  for (const IndexSet* s : {&first_, &middle_, &last_}) out.insert(out.end(), s->begin(), s->end());
  return out;
}

IndexSet nonzero_rows(const Matrix& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) {
        out.push_back(i);
        break;
      }
    }
  }
  return IndexSet(a.rows(), std::move(out));
}

IndexSet nonzero_cols(const Matrix& a) {
  std::vector<char> hit(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) hit[j] = 1;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (hit[j]) out.push_back(j);
  return IndexSet(a.cols(), std::move(out));
}

IndexSet null_ideal(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("null ideal of a non-square matrix");
  a.require_nonnegative("null_ideal");
  return disjoint_complement(nonzero_cols(a));
}

IndexSet disjoint_complement(const IndexSet& s) { return IndexSet::all(s.ambient()).minus(s); }

IndexPartition triple_decomposition(const Matrix& u) {
  if (!u.is_square()) throw DimensionError("triple decomposition of a non-square matrix");
  u.require_nonnegative("triple_decomposition");
  const Matrix u2 = matmul(u, u);
  if (!matmul(u2, u).is_zero()) throw PreconditionError("triple decomposition requires U^3 = 0");
  const IndexSet n1 = null_ideal(u);
  const IndexSet n2 = null_ideal(u2);
  return IndexPartition(n1, n2.minus(n1), disjoint_complement(n2));
}

BlockForm product_form_decomposition(const Matrix& t) {
  if (!t.is_square()) throw DimensionError("product form of a non-square matrix");
  t.require_nonnegative("product_form_decomposition");
  if (!matmul(t, t).is_zero()) {
    throw PreconditionError("T^2 != 0: not representable in the three-block product form");
  }
  IndexSet rows = nonzero_rows(t);
  IndexSet cols = nonzero_cols(t);
  IndexSet middle = IndexSet::all(t.rows()).minus(rows).minus(cols);
  Matrix block = t.submatrix(rows.indices(), cols.indices());
  return BlockForm{IndexPartition(std::move(rows), std::move(middle), std::move(cols)),
                   std::move(block)};
}

Matrix assemble_from_form(const BlockForm& form) {
  const auto& p = form.partition;
  if (form.block.rows() != p.first().size() || form.block.cols() != p.last().size()) {
    throw DimensionError("block is " + std::to_string(form.block.rows()) + "x" +
                         std::to_string(form.block.cols()) + ", partition expects " +
                         std::to_string(p.first().size()) + "x" + std::to_string(p.last().size()));
  }
  Matrix out(p.ambient(), p.ambient());
  for (std::size_t i = 0; i < p.first().size(); ++i)
    for (std::size_t j = 0; j < p.last().size(); ++j) out(p.first()[i], p.last()[j]) = form.block(i, j);
  return out;
}

}  // namespace sqzero
