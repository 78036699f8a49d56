#include "sqzero/counterexample.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

#include "sqzero/errors.hpp"
#include "sqzero/lattice.hpp"
#include "sqzero/linalg.hpp"
#include "sqzero/rng.hpp"

namespace sqzero {

Matrix build_rank_gap_block() {
  return Matrix{{1, 1, 0, 0},  //
                {1, 0, 1, 0},
                {0, 1, 0, 1},
                {0, 0, 1, 1}};
}

Matrix build_counterexample() {
  const Matrix block = build_rank_gap_block();
  Matrix t(11, 11);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t(i, 7 + j) = block(i, j);
  return t;
}

RankOneUpdateReport rank_one_update_check(const Vec4& u, const Vec4& v) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (u[i].sign() < 0) throw NegativeEntryError("rank_one_update_check (u)", i, 0);
    if (v[i].sign() < 0) throw NegativeEntryError("rank_one_update_check (v)", i, 0);
  }
  const Matrix gap_block = build_rank_gap_block();
  Matrix sum = gap_block;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) sum(i, j) += u[i] * v[j];

  RankOneUpdateReport r;
  r.drop_last_row_first_column_formula = Rational(1) + v[1] * u[0] + v[2] * u[1] + v[3] * (u[2] - u[0]);
  r.drop_second_row_last_column_formula = Rational(1) + v[0] * (u[0] - u[2]) + v[1] * u[2] + v[2] * u[3];
  r.which = u[0] <= u[2] ? RankOneUpdateCase::kDropLastRowFirstColumn : RankOneUpdateCase::kDropSecondRowLastColumn;

  std::array<std::size_t, 3> rows{}, cols{};
  std::array<Rational, 3> ut, vt;
  if (r.which == RankOneUpdateCase::kDropLastRowFirstColumn) {
    rows = {0, 1, 2};  // last row deleted
    cols = {1, 2, 3};  // first column deleted
    ut = {u[0], u[1], u[2]};
    vt = {v[1], v[2], v[3]};
    r.formula_value = r.drop_last_row_first_column_formula;
  } else {
    rows = {0, 2, 3};  // second row deleted
    cols = {0, 1, 2};  // last column deleted
    ut = {u[0], u[2], u[3]};
    vt = {v[0], v[1], v[2]};
    r.formula_value = r.drop_second_row_last_column_formula;
  }
  r.direct_determinant = det(sum.submatrix(rows, cols));
  r.lemma_value = det_rank_one_update(gap_block.submatrix(rows, cols), ut, vt);
  r.rank_of_sum = rank(sum);
  return r;
}

namespace {

struct Layout {
  std::vector<std::size_t> first, middle, last;
  std::size_t n = 0;
};

Layout search_layout(const Matrix& t) {
  Layout l;
  l.n = t.rows();
  if (matmul(t, t).is_zero()) {
    const BlockForm f = product_form_decomposition(t);
    l.first = f.partition.first().indices();
    l.middle = f.partition.middle().indices();
    l.last = f.partition.last().indices();
  } else {
    l.first = IndexSet::all(l.n).indices();
  }
  return l;
}

// Draws one square-zero matrix with entries in [0, max_entry] into `m` (row-major n x n).
void draw(const Layout& l, SplitMix64& rng, const SearchOptions& o, std::vector<std::int64_t>& m) {
  std::fill(m.begin(), m.end(), 0);
  auto entry = [&]() -> std::int64_t {
    if (!rng.bernoulli(o.density)) return 0;
    return static_cast<std::int64_t>(rng.uniform(1, o.max_entry));
  };
  std::vector<char> left(l.middle.size());
  for (auto& c : left) c = rng.bernoulli(0.5) ? 1 : 0;
  for (std::size_t i : l.first) {
    for (std::size_t t = 0; t < l.middle.size(); ++t)
      if (left[t]) m[i * l.n + l.middle[t]] = entry();
    for (std::size_t j : l.last) m[i * l.n + j] = entry();
  }
  for (std::size_t t = 0; t < l.middle.size(); ++t) {
    if (left[t]) continue;
    for (std::size_t j : l.last) m[l.middle[t] * l.n + j] = entry();
  }
}

void commutator(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& nn, std::size_t n,
                std::vector<std::int64_t>& c) {
  std::fill(c.begin(), c.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t mik = m[i * n + k], nik = nn[i * n + k];
      if (mik == 0 && nik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += mik * nn[k * n + j] - nik * m[k * n + j];
    }
}

struct Partial {
  std::uint64_t hits = 0;
  std::optional<Rational> min_distance;
  std::optional<std::uint64_t> first_hit;
};

Partial run_range(const Matrix& t, const Layout& l, const SearchOptions& o, bool integer_path,
                  const std::vector<std::int64_t>& t_int, std::uint64_t begin, std::uint64_t end) {
  Partial p;
  const std::size_t n = l.n;
  std::vector<std::int64_t> m(n * n), nn(n * n), c(n * n);
  std::int64_t best_int = -1;
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    SplitMix64 rng(o.seed, trial);
    draw(l, rng, o, m);
    draw(l, rng, o, nn);
    commutator(m, nn, n, c);
    if (integer_path) {
      std::int64_t worst = 0;
      for (std::size_t k = 0; k < n * n; ++k) worst = std::max(worst, std::abs(c[k] - t_int[k]));
      if (best_int < 0 || worst < best_int) best_int = worst;
      if (worst == 0) {
        ++p.hits;
        if (!p.first_hit) p.first_hit = trial;
      }
      continue;
    }
    Matrix cm(n, n);
    for (std::size_t k = 0; k < n * n; ++k) cm(k / n, k % n) = Rational(static_cast<long>(c[k]));
    const Rational d = max_abs_difference(cm, t);
    if (d.is_zero()) {
      ++p.hits;
      if (!p.first_hit) p.first_hit = trial;
    }
    if (!p.min_distance || d < *p.min_distance) p.min_distance = d;
  }
  if (integer_path && best_int >= 0) p.min_distance = Rational(static_cast<long>(best_int));
  return p;
}

}  // namespace

SearchSummary randomized_commutator_search(const Matrix& t, const SearchOptions& options) {
  if (!t.is_square()) throw DimensionError("randomized_commutator_search needs a square matrix");
  t.require_nonnegative("randomized_commutator_search");
  if (options.max_entry < 1 || options.max_entry > 10000) {
    throw PreconditionError("randomized_commutator_search: max_entry must lie in [1, 10000]");
  }
  if (!(options.density > 0.0 && options.density <= 1.0)) {
    throw PreconditionError("randomized_commutator_search: density must lie in (0, 1]");
  }
  SearchSummary s;
  s.trials = options.trials;
  if (options.trials == 0) return s;

  const Layout layout = search_layout(t);
  std::vector<std::int64_t> t_int(t.rows() * t.cols());
  s.integer_path = true;
  for (std::size_t k = 0; k < t_int.size() && s.integer_path; ++k) {
    const Rational& e = t.entries()[k];
    if (!e.is_integer() || !e.numerator().fits_slong_p()) {
      s.integer_path = false;
    } else {
      t_int[k] = e.numerator().get_si();
    }
  }

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, 64));
  std::vector<Partial> parts(threads);
  const std::uint64_t chunk = (options.trials + threads - 1) / threads;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(options.trials, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(options.trials, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        parts[w] = run_range(t, layout, options, s.integer_path, t_int, begin, end);
      });
    }
  }
  for (const Partial& p : parts) {
    s.exact_hits += p.hits;
    if (p.min_distance && (!s.min_distance || *p.min_distance < *s.min_distance)) s.min_distance = p.min_distance;
    if (p.first_hit && (!s.first_hit || *p.first_hit < *s.first_hit)) s.first_hit = p.first_hit;
  }
  return s;
}

}  // namespace sqzero
