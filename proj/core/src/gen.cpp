#include "sqzero/gen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "sqzero/errors.hpp"
#include "sqzero/linalg.hpp"
#include "sqzero/rng.hpp"

namespace sqzero {

namespace {

// Substream identifiers.
constexpr std::uint64_t kLayoutStream = 0;
constexpr std::uint64_t kWitnessStream = 1;
constexpr std::uint64_t kPairStream = 2;

class EntrySampler {
 public:
  EntrySampler(const GenConfig& cfg, SplitMix64& rng) : cfg_(cfg), rng_(rng) {}

  Rational draw() {
    if (!rng_.bernoulli(cfg_.density)) return Rational(0);
    return nonzero();
  }
  Rational nonzero() {
    const auto v = rng_.uniform(1, cfg_.max_entry);
    return Rational(mpz_class(static_cast<unsigned long>(v)),
                    mpz_class(static_cast<unsigned long>(cfg_.denominator)));
  }

  SplitMix64& rng() { return rng_; }

 private:
  const GenConfig& cfg_;
  SplitMix64& rng_;
};

IndexPartition make_layout(const GenConfig& cfg) {
  const std::size_t n = cfg.dimension();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (cfg.shuffle) {
    SplitMix64 rng(cfg.seed, kLayoutStream);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(0, i - 1)]);
  }
  auto slice = [&](std::size_t from, std::size_t count) {
    return IndexSet(n, std::vector<std::size_t>(perm.begin() + from, perm.begin() + from + count));
  };
  return IndexPartition(slice(0, cfg.first), slice(cfg.first, cfg.middle),
                        slice(cfg.first + cfg.middle, cfg.last));
}

// Square-zero matrix in strictly upper block form over `layout`: the middle
// coordinates are split into two colors, M12 lives on the first, M23 on the second.
Matrix draw_square_zero(const IndexPartition& layout, EntrySampler& sample) {
  const std::size_t n = layout.ambient();
  Matrix m(n, n);
  std::vector<char> left_color(layout.middle().size());
  for (auto& c : left_color) c = sample.rng().bernoulli(0.5) ? 1 : 0;
  for (std::size_t i : layout.first()) {
    for (std::size_t t = 0; t < layout.middle().size(); ++t)
      if (left_color[t]) m(i, layout.middle()[t]) = sample.draw();
    for (std::size_t j : layout.last()) m(i, j) = sample.draw();
  }
  for (std::size_t t = 0; t < layout.middle().size(); ++t) {
    if (left_color[t]) continue;
    for (std::size_t j : layout.last()) m(layout.middle()[t], j) = sample.draw();
  }
  return m;
}

}  // namespace

void GenConfig::validate(bool for_witness) const {
  if (max_entry < 1) throw PreconditionError("GenConfig: max_entry must be >= 1");
  if (denominator < 1) throw PreconditionError("GenConfig: denominator must be >= 1");
  if (!(density > 0.0 && density <= 1.0)) throw PreconditionError("GenConfig: density must lie in (0, 1]");
  if (max_entry > std::numeric_limits<unsigned long>::max() ||
      denominator > std::numeric_limits<unsigned long>::max()) {
    throw PreconditionError("GenConfig: entry parameters out of range");
  }
  if (for_witness) {
    if (inner > middle) throw PreconditionError("GenConfig: inner dimension exceeds |I2|");
    if (inner > 0 && (first == 0 || last == 0)) {
      throw PreconditionError("GenConfig: inner dimension > 0 needs nonempty I1 and I3");
    }
  }
}

GeneratedWitness gen_witness(const GenConfig& cfg) {
  cfg.validate(true);
  IndexPartition layout = make_layout(cfg);
  SplitMix64 rng(cfg.seed, kWitnessStream);
  EntrySampler sample(cfg, rng);

  Matrix left(cfg.first, cfg.inner), right(cfg.inner, cfg.last);
  for (std::size_t i = 0; i < cfg.first; ++i)
    for (std::size_t t = 0; t < cfg.inner; ++t) left(i, t) = sample.draw();
  for (std::size_t t = 0; t < cfg.inner; ++t)
    for (std::size_t j = 0; j < cfg.last; ++j) right(t, j) = sample.draw();
  // Every middle coordinate used must carry both a nonzero column of L and a
  // nonzero row of R, so that it survives in the cube-zero decomposition of U.
  for (std::size_t t = 0; t < cfg.inner; ++t) {
    bool any = false;
    for (std::size_t i = 0; i < cfg.first && !any; ++i) any = !left(i, t).is_zero();
    if (!any) left(rng.uniform(0, cfg.first - 1), t) = sample.nonzero();
    any = false;
    for (std::size_t j = 0; j < cfg.last && !any; ++j) any = !right(t, j).is_zero();
    if (!any) right(t, rng.uniform(0, cfg.last - 1)) = sample.nonzero();
  }

  BlockForm form{std::move(layout), matmul(left, right)};
  SquareZeroWitness witness = construct_factors_from_form(form, left, right);
  Matrix t = assemble_from_form(form);
  return GeneratedWitness{std::move(t), std::move(witness), std::move(form), std::move(left),
                          std::move(right)};
}

CommutatorDraw gen_commutator_pair(const GenConfig& cfg, std::size_t max_rejects) {
  cfg.validate(false);
  if (max_rejects < 1) throw PreconditionError("gen_commutator_pair: max_rejects must be >= 1");
  CommutatorDraw out;
  out.layout = make_layout(cfg);
  SplitMix64 rng(cfg.seed, kPairStream);
  EntrySampler sample(cfg, rng);
  while (out.attempts < max_rejects) {
    ++out.attempts;
    Matrix m = draw_square_zero(out.layout, sample);
    Matrix n = draw_square_zero(out.layout, sample);
    if ((matmul(m, n) - matmul(n, m)).is_nonnegative()) {
      out.pair.emplace(std::move(m), std::move(n));
      break;
    }
  }
  return out;
}

TinyEnumerator::TinyEnumerator(std::size_t n, std::vector<Rational> entries, std::uint64_t budget)
    : n_(n) {
  if (n > 5) throw PreconditionError("gen_tiny_exhaustive supports n <= 5");
  for (const auto& e : entries) {
    if (e.sign() < 0) throw PreconditionError("gen_tiny_exhaustive: negative entry " + e.to_string());
    if (e.is_zero()) {
      has_zero_ = true;
    } else {
      values_.push_back(e);
    }
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());

  // Without zero every entry is nonzero, so T^2 = 0 is impossible for n >= 1.
  if (!has_zero_ && n_ > 0) {
    done_ = true;
    return;
  }
  const std::uint64_t base = values_.size() + 1;
  std::uint64_t layouts = 1;
  for (std::size_t i = 0; i < n_; ++i) layouts *= 3;
  for (std::uint64_t code = 0; code < layouts; ++code) {
    std::uint64_t c = code, rows = 0, cols = 0;
    for (std::size_t i = 0; i < n_; ++i, c /= 3) {
      rows += (c % 3 == 1);
      cols += (c % 3 == 2);
    }
    std::uint64_t count = 1;
    for (std::uint64_t cell = 0; cell < rows * cols; ++cell) {
      if (count > budget / base + 1) {
        count = budget + 1;
        break;
      }
      count *= base;
    }
    candidates_ += count;
    if (candidates_ > budget) {
      throw BudgetError("gen_tiny_exhaustive: more than " + std::to_string(budget) + " candidates");
    }
  }
}

bool TinyEnumerator::advance_layout() {
  std::size_t i = 0;
  while (i < n_ && roles_[i] == 2) roles_[i++] = 0;
  if (i == n_) return false;
  ++roles_[i];
  p_.clear();
  q_.clear();
  for (std::size_t j = 0; j < n_; ++j) {
    if (roles_[j] == 1) p_.push_back(j);
    if (roles_[j] == 2) q_.push_back(j);
  }
  digits_.assign(p_.size() * q_.size(), 0);
  return true;
}

bool TinyEnumerator::advance_values() {
  const std::size_t base = values_.size() + 1;
  std::size_t i = 0;
  while (i < digits_.size() && digits_[i] + 1 == base) digits_[i++] = 0;
  if (i == digits_.size()) return false;
  ++digits_[i];
  return true;
}

bool TinyEnumerator::current_is_exact() const {
  const std::size_t qs = q_.size();
  for (std::size_t a = 0; a < p_.size(); ++a) {
    bool any = false;
    for (std::size_t b = 0; b < qs && !any; ++b) any = digits_[a * qs + b] != 0;
    if (!any) return false;
  }
  for (std::size_t b = 0; b < qs; ++b) {
    bool any = false;
    for (std::size_t a = 0; a < p_.size() && !any; ++a) any = digits_[a * qs + b] != 0;
    if (!any) return false;
  }
  return true;
}

std::optional<Matrix> TinyEnumerator::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
      roles_.assign(n_, 0);
      p_.clear();
      q_.clear();
      digits_.clear();
    } else if (!advance_values() && !advance_layout()) {
      done_ = true;
      break;
    }
    if (!current_is_exact()) continue;
    Matrix t(n_, n_);
    for (std::size_t a = 0; a < p_.size(); ++a)
      for (std::size_t b = 0; b < q_.size(); ++b) {
        const std::size_t d = digits_[a * q_.size() + b];
        if (d != 0) t(p_[a], q_[b]) = values_[d - 1];
      }
    return t;
  }
  return std::nullopt;
}

std::vector<Matrix> TinyEnumerator::all() {
  std::vector<Matrix> out;
  while (auto t = next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace sqzero
