#include <gtest/gtest.h>

#include <random>

#include "sqzero/counterexample.hpp"
#include "sqzero/errors.hpp"
#include "sqzero/gen.hpp"
#include "sqzero/linalg.hpp"
#include "sqzero/squarezero.hpp"
#include "test_util.hpp"

namespace sqzero {
namespace {

Matrix e(std::size_t n, std::size_t r, std::size_t c) { return Matrix::unit(n, r, c); }

// Oracle: T (nonnegative, n <= 5) is a square-zero product iff some 3-coloring
// supports T on J1 x J3 with rank+(T[J1, J3]) <= |J2|. For n <= 5 the block has
// a side of length <= 2, where rank+ equals rank.
bool oracle_is_product(const Matrix& t) {
  const std::size_t n = t.rows();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<std::size_t> j1, j2, j3;
    std::size_t c = code;
    std::vector<int> color(n);
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      color[i] = static_cast<int>(c % 3);
      (color[i] == 0 ? j1 : color[i] == 1 ? j2 : j3).push_back(i);
    }
    bool supported = true;
    for (std::size_t i = 0; i < n && supported; ++i)
      for (std::size_t j = 0; j < n && supported; ++j)
        if (!t(i, j).is_zero() && !(color[i] == 0 && color[j] == 2)) supported = false;
    if (!supported) continue;
    if (std::min(j1.size(), j3.size()) > 2) ADD_FAILURE() << "oracle used outside its range";
    const std::size_t r = (j1.empty() || j3.empty()) ? 0 : rank(t.submatrix(j1, j3));
    if (r <= j2.size()) return true;
  }
  return false;
}

Matrix random_square_zero_pair_member(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> role(n);
  for (auto& r : role) r = static_cast<int>(rng() % 3);
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (role[i] == 1 && role[j] == 2 && rng() % 2) t(i, j) = static_cast<long>(1 + rng() % 2);
  return t;
}

TEST(VerifyWitness, Examples) {
  const WitnessCheck ok = verify_witness({e(3, 0, 1), e(3, 1, 2), e(3, 0, 1) + e(3, 1, 2)}, e(3, 0, 2));
  EXPECT_TRUE(ok.ok());
  EXPECT_TRUE(ok.violations().empty());

  EXPECT_TRUE(verify_witness({e(2, 0, 1), e(2, 0, 1), e(2, 0, 1) * Rational(2)}, Matrix(2, 2)).ok());

  const WitnessCheck bad = verify_witness({e(2, 1, 0), e(2, 0, 1), e(2, 1, 0) + e(2, 0, 1)}, e(2, 1, 1));
  EXPECT_FALSE(bad.ok());
  EXPECT_TRUE(bad.product_equals_t);
  EXPECT_FALSE(bad.reverse_product_zero);
  EXPECT_FALSE(bad.violations().empty());

  const WitnessCheck shapes = verify_witness({e(2, 0, 1), e(3, 0, 1), e(2, 0, 1)}, Matrix(2, 2));
  EXPECT_FALSE(shapes.shapes_agree);
}

TEST(ConstructFactors, Examples) {
  BlockForm f{IndexPartition(IndexSet(3, {0}), IndexSet(3, {1}), IndexSet(3, {2})), Matrix{{1}}};
  const SquareZeroWitness w = construct_factors_from_form(f, Matrix{{1}}, Matrix{{1}});
  EXPECT_EQ(w.m, e(3, 0, 1));
  EXPECT_EQ(w.n, e(3, 1, 2));

  const BlockForm big = product_form_decomposition(build_counterexample());
  EXPECT_EQ(big.partition.middle().size(), 3u);
  const Matrix l = Matrix::identity(4), r = build_rank_gap_block();
  EXPECT_THROW(construct_factors_from_form(big, l, r), BudgetError);

  const Matrix u{{1}, {2}}, v{{3, 1}};
  BlockForm g{IndexPartition(IndexSet(5, {0, 1}), IndexSet(5, {2}), IndexSet(5, {3, 4})), matmul(u, v)};
  const SquareZeroWitness wg = construct_factors_from_form(g, u, v);
  EXPECT_TRUE(verify_witness(wg, assemble_from_form(g)).ok());
  EXPECT_EQ(wg.m(1, 2), Rational(2));
  EXPECT_EQ(wg.n(2, 3), Rational(3));

  EXPECT_THROW(construct_factors_from_form(g, u, Matrix{{3, 2}}), PreconditionError);
  EXPECT_THROW(construct_factors_from_form(f, Matrix{{-1}}, Matrix{{-1}}), NegativeEntryError);
}

TEST(CubeZeroRoot, Examples) {
  const Matrix u = cube_zero_root({e(3, 0, 1), e(3, 1, 2), e(3, 0, 1) + e(3, 1, 2)});
  EXPECT_EQ(u, e(3, 0, 1) + e(3, 1, 2));
  EXPECT_EQ(matmul(u, u), e(3, 0, 2));
  EXPECT_TRUE(cube_zero_root({Matrix(3, 3), Matrix(3, 3), Matrix(3, 3)}).is_zero());
  EXPECT_THROW(cube_zero_root({e(2, 1, 0), e(2, 0, 1), e(2, 1, 0) + e(2, 0, 1)}), PreconditionError);
}

TEST(FormFromCubeZero, Examples) {
  const CubeZeroForm f = form_from_cube_zero(e(3, 0, 1) + e(3, 1, 2));
  EXPECT_EQ(f.form.partition, IndexPartition(IndexSet(3, {0}), IndexSet(3, {1}), IndexSet(3, {2})));
  EXPECT_EQ(f.u12, (Matrix{{1}}));
  EXPECT_EQ(f.u23, (Matrix{{1}}));
  EXPECT_EQ(f.form.block, (Matrix{{1}}));

  const CubeZeroForm z = form_from_cube_zero(Matrix(3, 3));
  EXPECT_TRUE(z.form.partition.last().empty());
  EXPECT_TRUE(assemble_from_form(z.form).is_zero());

  Matrix j4(4, 4);
  for (std::size_t i = 0; i < 3; ++i) j4(i, i + 1) = 1;
  EXPECT_THROW(form_from_cube_zero(j4), PreconditionError);
}

TEST(Decide, Examples) {
  const Verdict a = decide_square_zero_product(e(3, 0, 2));
  EXPECT_EQ(a.answer, Answer::kYes);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(a.witness->m, e(3, 0, 1));
  EXPECT_EQ(a.witness->n, e(3, 1, 2));

  const Verdict b = decide_square_zero_product(e(2, 0, 1));
  EXPECT_EQ(b.answer, Answer::kNo);
  EXPECT_FALSE(b.witness.has_value());

  const Verdict c = decide_square_zero_product(build_counterexample());
  EXPECT_EQ(c.answer, Answer::kNo);
  ASSERT_TRUE(c.bounds.has_value());
  EXPECT_EQ(c.bounds->lower, 4u);
  EXPECT_EQ(c.form->partition.middle().size(), 3u);

  const Verdict d = decide_square_zero_product(Matrix::identity(2));
  EXPECT_EQ(d.answer, Answer::kNo);
  EXPECT_EQ(d.reason, "T^2 != 0");

  EXPECT_THROW(decide_square_zero_product(Matrix{{0, -1}, {0, 0}}), NegativeEntryError);
  EXPECT_THROW(decide_square_zero_product(Matrix{{0, 1}}), DimensionError);
}

TEST(CommutatorAnalysis, Examples) {
  const CommutatorReport r = commutator_analysis(e(3, 0, 1), e(3, 1, 2));
  EXPECT_TRUE(r.nonnegative);
  EXPECT_EQ(r.commutator, e(3, 0, 2));
  EXPECT_TRUE(r.annihilation());
  EXPECT_EQ(r.block_rank, 1u);
  EXPECT_EQ(r.middle_dim, 1u);
  EXPECT_TRUE(r.block_factorizes);
  EXPECT_TRUE(r.necessary_condition);

  const CommutatorReport s = commutator_analysis(e(3, 1, 2), e(3, 0, 1));
  EXPECT_FALSE(s.nonnegative);
  EXPECT_EQ(s.commutator, e(3, 0, 2) * Rational(-1));

  EXPECT_THROW(commutator_analysis(Matrix::identity(2), e(2, 0, 1)), PreconditionError);
  EXPECT_THROW(commutator_analysis(e(2, 0, 1) * Rational(-1), e(2, 0, 1)), NegativeEntryError);
}

TEST(NecessaryCondition, Examples) {
  const NecessaryCheck big = necessary_condition_check(build_counterexample());
  EXPECT_TRUE(big.holds);
  EXPECT_EQ(big.block_rank, 3u);
  EXPECT_EQ(big.middle_dim, 3u);
  EXPECT_FALSE(necessary_condition_check(Matrix::identity(3)).holds);
  EXPECT_FALSE(necessary_condition_check(e(2, 0, 1)).holds);
}

TEST(Classification, Examples) {
  EXPECT_EQ(classify_commutator_candidate(build_counterexample()).status, CommutatorStatus::kGap);
  EXPECT_EQ(classify_commutator_candidate(e(3, 0, 2)).status, CommutatorStatus::kProductForm);
  EXPECT_EQ(classify_commutator_candidate(e(2, 0, 1)).status, CommutatorStatus::kNecessaryFails);
}

TEST(SquareZeroProperty, ConstructVerifyRoundtrip) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    GenConfig cfg;
    cfg.seed = seed;
    cfg.first = 1 + rng() % 4;
    cfg.middle = 1 + rng() % 4;
    cfg.last = 1 + rng() % 4;
    cfg.inner = 1 + rng() % cfg.middle;
    cfg.shuffle = seed % 2;
    cfg.denominator = 1 + seed % 3;
    const GeneratedWitness g = gen_witness(cfg);
    ASSERT_TRUE(verify_witness(g.witness, g.t).ok());
    ASSERT_EQ(matmul(g.witness.m, g.witness.n), g.t);
    const Matrix u = cube_zero_root(g.witness);
    const CubeZeroForm f = form_from_cube_zero(u);
    ASSERT_GE(f.form.partition.middle().size(), cfg.inner);
    ASSERT_EQ(assemble_from_form(f.form), g.t);
  }
}

TEST(SquareZeroProperty, DecideAgreesWithPartitionOracle) {
  // exhaustive for n <= 3 over {0, 1, 2}
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n * n; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Matrix t(n, n);
      std::size_t c = code;
      for (std::size_t k = 0; k < n * n; ++k, c /= 3) t(k / n, k % n) = static_cast<long>(c % 3);
      if (!matmul(t, t).is_zero()) continue;
      const Verdict v = decide_square_zero_product(t);
      ASSERT_NE(v.answer, Answer::kUnknown);
      ASSERT_EQ(v.answer == Answer::kYes, oracle_is_product(t)) << t;
      if (v.witness) ASSERT_TRUE(verify_witness(*v.witness, t).ok());
    }
  }
  // sampled for n = 4, 5
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 4 + rng() % 2;
    const Matrix t = random_square_zero_pair_member(rng, n);
    const Verdict v = decide_square_zero_product(t);
    ASSERT_NE(v.answer, Answer::kUnknown);
    ASSERT_EQ(v.answer == Answer::kYes, oracle_is_product(t)) << t;
  }
}

TEST(SquareZeroProperty, PermutationEquivariance) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Matrix t = random_square_zero_pair_member(rng, n);
    const Matrix p = testing::permutation_matrix(testing::random_permutation(rng, n));
    const Matrix pt = matmul(matmul(p, t), p.transpose());
    const Verdict a = decide_square_zero_product(t), b = decide_square_zero_product(pt);
    ASSERT_EQ(a.answer, b.answer);
    if (b.witness) ASSERT_TRUE(verify_witness(*b.witness, pt).ok());
  }
}

TEST(SquareZeroProperty, NonnegativeCommutatorsSatisfyNecessaryCondition) {
  std::mt19937_64 rng(47);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Matrix m = random_square_zero_pair_member(rng, n);
    const Matrix nn = random_square_zero_pair_member(rng, n);
    if (!matmul(m, m).is_zero() || !matmul(nn, nn).is_zero()) continue;
    const CommutatorReport r = commutator_analysis(m, nn);
    if (!r.nonnegative) continue;
    ++accepted;
    ASSERT_TRUE(r.annihilation());
    ASSERT_TRUE(r.sum_cube_zero);
    ASSERT_TRUE(r.block_pattern);
    ASSERT_TRUE(r.block_factorizes);
    ASSERT_TRUE(r.necessary_condition);
    ASSERT_TRUE(necessary_condition_check(r.commutator).holds);
  }
  EXPECT_GT(accepted, 200u);

  // generator-driven pairs
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.first = 1 + seed % 3;
    cfg.middle = 1 + seed % 4;
    cfg.last = 1 + seed % 2;
    const CommutatorDraw d = gen_commutator_pair(cfg, 1000);
    if (!d.pair) continue;
    const CommutatorReport r = commutator_analysis(d.pair->first, d.pair->second);
    ASSERT_TRUE(r.nonnegative);
    ASSERT_TRUE(r.necessary_condition);
    ASSERT_TRUE(necessary_condition_check(r.commutator).holds);
  }
}

}  // namespace
}  // namespace sqzero
