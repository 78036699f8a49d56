#include <gtest/gtest.h>

#include <random>

#include "sqzero/errors.hpp"
#include "sqzero/lattice.hpp"
#include "sqzero/linalg.hpp"
#include "test_util.hpp"

namespace sqzero {
namespace {

Matrix jordan(std::size_t n) {
  Matrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return j;
}

// Oracle: index j spans part of N(A) iff A e_j = 0.
IndexSet null_ideal_by_unit_vectors(const Matrix& a) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Matrix e(a.cols(), 1);
    e(j, 0) = 1;
    if (matmul(a, e).is_zero()) out.push_back(j);
  }
  return IndexSet(a.cols(), out);
}

TEST(IndexSet, ValidatesAndSorts) {
  IndexSet s(5, {3, 1, 4});
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_THROW(IndexSet(3, {0, 0}), DimensionError);
  EXPECT_THROW(IndexSet(3, {3}), DimensionError);
}

TEST(IndexPartition, RejectsOverlapAndGaps) {
  EXPECT_THROW(IndexPartition(IndexSet(3, {0}), IndexSet(3, {0}), IndexSet(3, {1, 2})), DimensionError);
  EXPECT_THROW(IndexPartition(IndexSet(3, {0}), IndexSet(3, {1}), IndexSet::none(3)), DimensionError);
  IndexPartition p(IndexSet(4, {2}), IndexSet(4, {0, 3}), IndexSet(4, {1}));
  EXPECT_EQ(p.order(), (std::vector<std::size_t>{2, 0, 3, 1}));
}

TEST(NullIdeal, Examples) {
  EXPECT_TRUE(null_ideal(Matrix::identity(3)).empty());
  EXPECT_EQ(null_ideal(Matrix(4, 4)), IndexSet::all(4));
  EXPECT_EQ(null_ideal(jordan(3)), IndexSet(3, {0}));
  EXPECT_EQ(null_ideal(jordan(3)), null_ideal_by_unit_vectors(jordan(3)));
}

TEST(NullIdeal, RejectsNegativeEntries) {
  EXPECT_THROW(null_ideal(Matrix{{0, -1}, {0, 0}}), NegativeEntryError);
}

TEST(DisjointComplement, Examples) {
  EXPECT_EQ(disjoint_complement(IndexSet::none(3)), IndexSet(3, {0, 1, 2}));
  EXPECT_EQ(disjoint_complement(IndexSet(4, {0, 2})), IndexSet(4, {1, 3}));
  EXPECT_TRUE(disjoint_complement(IndexSet::all(6)).empty());
}

TEST(TripleDecomposition, Examples) {
  EXPECT_EQ(triple_decomposition(jordan(3)),
            IndexPartition(IndexSet(3, {0}), IndexSet(3, {1}), IndexSet(3, {2})));
  EXPECT_EQ(triple_decomposition(Matrix(2, 2)),
            IndexPartition(IndexSet::all(2), IndexSet::none(2), IndexSet::none(2)));
  EXPECT_EQ(triple_decomposition(Matrix::unit(2, 0, 1)),
            IndexPartition(IndexSet(2, {0}), IndexSet(2, {1}), IndexSet::none(2)));
}

TEST(TripleDecomposition, RejectsNonCubeZero) {
  EXPECT_THROW(triple_decomposition(jordan(4)), PreconditionError);
  EXPECT_THROW(triple_decomposition(Matrix{{0, 1}, {1, 0}}), PreconditionError);
  EXPECT_THROW(triple_decomposition(Matrix{{0, -1}, {0, 0}}), NegativeEntryError);
}

TEST(ProductForm, Examples) {
  const BlockForm f = product_form_decomposition(Matrix::unit(3, 0, 2));
  EXPECT_EQ(f.partition, IndexPartition(IndexSet(3, {0}), IndexSet(3, {1}), IndexSet(3, {2})));
  EXPECT_EQ(f.block, (Matrix{{1}}));

  const BlockForm g = product_form_decomposition(Matrix::unit(2, 0, 1));
  EXPECT_EQ(g.partition, IndexPartition(IndexSet(2, {0}), IndexSet::none(2), IndexSet(2, {1})));
  EXPECT_EQ(g.block, (Matrix{{1}}));

  EXPECT_THROW(product_form_decomposition(Matrix::identity(2)), PreconditionError);
}

TEST(AssembleFromForm, Examples) {
  BlockForm f{IndexPartition(IndexSet(3, {0}), IndexSet(3, {1}), IndexSet(3, {2})), Matrix{{5}}};
  EXPECT_EQ(assemble_from_form(f), Matrix::unit(3, 0, 2) * Rational(5));

  BlockForm g{IndexPartition(IndexSet(4, {0, 1}), IndexSet::none(4), IndexSet(4, {2, 3})),
              Matrix{{1, 1}, {1, 1}}};
  EXPECT_EQ(assemble_from_form(g),
            (Matrix{{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}));

  BlockForm bad{f.partition, Matrix{{1, 2}}};
  EXPECT_THROW(assemble_from_form(bad), DimensionError);
}

Matrix random_square_zero(std::mt19937_64& rng, std::size_t n) {
  // Random disjoint row/column supports.
  std::vector<int> role(n);
  for (auto& r : role) r = static_cast<int>(rng() % 3);
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (role[i] == 1 && role[j] == 2 && rng() % 2) t(i, j) = static_cast<long>(1 + rng() % 3);
  return t;
}

TEST(ProductFormProperty, RoundtripOnRandomSquareZero) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Matrix t = random_square_zero(rng, 1 + rng() % 8);
    const BlockForm f = product_form_decomposition(t);
    ASSERT_EQ(assemble_from_form(f), t);
    ASSERT_EQ(nonzero_rows(f.block).size(), f.block.rows());
    ASSERT_EQ(nonzero_cols(f.block).size(), f.block.cols());
  }
}

TEST(NullIdealProperty, IteratedNullIdealsGrow) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 7;
    const Matrix a = testing::random_matrix(rng, n, n, 0, 2, 1, 0.3);
    ASSERT_TRUE(null_ideal(a).is_subset_of(null_ideal(matmul(a, a))));
    ASSERT_EQ(null_ideal(a), null_ideal_by_unit_vectors(a));
  }
}

TEST(TripleDecompositionProperty, PermutedMatrixIsStrictlyBlockUpperTriangular) {
  std::mt19937_64 rng(19);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 1 + rng() % 8;
    // Random nilpotent: strictly upper triangular in a random order, depth <= 3.
    const auto perm = testing::random_permutation(rng, n);
    std::vector<std::size_t> level(n);
    for (auto& l : level) l = rng() % 3;
    Matrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (level[perm[i]] < level[perm[j]] && rng() % 2) u(i, j) = static_cast<long>(1 + rng() % 2);
    if (!power(u, 3).is_zero()) continue;
    const IndexPartition p = triple_decomposition(u);
    const Matrix pu = permute_symmetric(u, p.order());
    const Matrix pu2 = permute_symmetric(matmul(u, u), p.order());
    auto block_of = [&](std::size_t pos) {
      if (pos < p.first().size()) return 0;
      if (pos < p.first().size() + p.middle().size()) return 1;
      return 2;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (block_of(i) >= block_of(j)) ASSERT_TRUE(pu(i, j).is_zero());
        if (!(block_of(i) == 0 && block_of(j) == 2)) ASSERT_TRUE(pu2(i, j).is_zero());
      }
    }
    ++checked;
  }
}

TEST(SquareZeroProperty, SquareZeroIffRowAndColumnSupportsDisjoint) {
  std::mt19937_64 rng(23);
  int zero = 0, nonzero = 0;
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix t = (rng() % 2) ? random_square_zero(rng, n) : testing::random_matrix(rng, n, n, 0, 2, 1, 0.2);
    const bool disjoint = nonzero_rows(t).intersect(nonzero_cols(t)).empty();
    const bool sq = matmul(t, t).is_zero();
    ASSERT_EQ(disjoint, sq);
    (sq ? zero : nonzero)++;
  }
  EXPECT_GT(zero, 100);
  EXPECT_GT(nonzero, 100);
}

// Enumerates all 3-colorings and checks the canonical middle block is largest.
TEST(ProductFormProperty, CanonicalPartitionMaximizesMiddle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix t = random_square_zero(rng, n);
    const BlockForm f = product_form_decomposition(t);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= 3;
    std::size_t best_middle = 0;
    bool canonical_seen = false;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<int> color(n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) color[i] = static_cast<int>(c % 3);
      bool supported = true;
      for (std::size_t i = 0; i < n && supported; ++i)
        for (std::size_t j = 0; j < n && supported; ++j)
          if (!t(i, j).is_zero() && !(color[i] == 0 && color[j] == 2)) supported = false;
      if (!supported) continue;
      const auto middle = static_cast<std::size_t>(std::count(color.begin(), color.end(), 1));
      best_middle = std::max(best_middle, middle);
      if (middle == f.partition.middle().size()) canonical_seen = true;
    }
    ASSERT_TRUE(canonical_seen);
    ASSERT_EQ(best_middle, f.partition.middle().size());
  }
}

}  // namespace
}  // namespace sqzero
