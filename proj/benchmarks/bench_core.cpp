#include <benchmark/benchmark.h>

#include "sqzero/sqzero.hpp"

using namespace sqzero;

namespace {

Matrix random_integer_matrix(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng.uniform(0, 9));
  return m;
}

void BM_RectangleCoverRankGapBlock(benchmark::State& state) {
  const SupportPattern b = support_pattern(build_rank_gap_block());
  for (auto _ : state) benchmark::DoNotOptimize(rectangle_cover_number(b));
}
BENCHMARK(BM_RectangleCoverRankGapBlock);

void BM_RectangleCoverRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(5);
  SupportPattern b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, rng.bernoulli(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(rectangle_cover(b).size);
}
BENCHMARK(BM_RectangleCoverRandom)->Arg(6)->Arg(8)->Arg(10);

void BM_NonnegRankBoundsRankGapBlock(benchmark::State& state) {
  const Matrix t = build_rank_gap_block();
  for (auto _ : state) benchmark::DoNotOptimize(nonneg_rank_bounds(t).upper);
}
BENCHMARK(BM_NonnegRankBoundsRankGapBlock);

void BM_DecideCounterexample(benchmark::State& state) {
  const Matrix t = build_counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(decide_square_zero_product(t).answer);
}
BENCHMARK(BM_DecideCounterexample);

void BM_ExactRank(benchmark::State& state) {
  const Matrix a = random_integer_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_ExactRank)->Arg(10)->Arg(20)->Arg(40);

void BM_LemmaCheck(benchmark::State& state) {
  const Vec4 u{Rational(3, 2), Rational(1), Rational(7, 3), Rational(0)};
  const Vec4 v{Rational(2), Rational(5, 4), Rational(0), Rational(9)};
  for (auto _ : state) benchmark::DoNotOptimize(rank_one_update_check(u, v).formula_value);
}
BENCHMARK(BM_LemmaCheck);

void BM_CommutatorSearch(benchmark::State& state) {
  const Matrix t = build_counterexample();
  SearchOptions o;
  o.trials = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(randomized_commutator_search(t, o).exact_hits);
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_CommutatorSearch);

void BM_GenWitnessRoundtrip(benchmark::State& state) {
  GenConfig cfg;
  cfg.first = cfg.middle = cfg.last = 6;
  cfg.inner = 4;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    const GeneratedWitness g = gen_witness(cfg);
    benchmark::DoNotOptimize(verify_witness(g.witness, g.t).ok());
  }
}
BENCHMARK(BM_GenWitnessRoundtrip);

}  // namespace

BENCHMARK_MAIN();
