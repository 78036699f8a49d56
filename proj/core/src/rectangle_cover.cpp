#include "sqzero/nnrank.hpp"

#include <algorithm>
#include <map>

#include <boost/dynamic_bitset.hpp>

namespace sqzero {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(const std::optional<std::chrono::duration<double>>& limit) {
    if (limit) at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*limit);
  }
  bool expired() const { return at_ && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

Bits row_bits(const SupportPattern& b, std::size_t r) {
  Bits bits(b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c)
    if (b(r, c)) bits.set(c);
  return bits;
}

std::vector<std::size_t> to_indices(const Bits& bits) {
  std::vector<std::size_t> out;
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

bool rectangle_less(const Rectangle& a, const Rectangle& b) {
  if (a.area() != b.area()) return a.area() > b.area();
  if (a.rows.indices() != b.rows.indices()) return a.rows.indices() < b.rows.indices();
  return a.cols.indices() < b.cols.indices();
}

// Closed column sets of the row-support intersection lattice. Returns false if
// the deadline expired before enumeration finished.
bool enumerate_maximal(const SupportPattern& b, const Deadline& deadline, std::vector<Rectangle>& out) {
  std::vector<Bits> rows;
  rows.reserve(b.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) rows.push_back(row_bits(b, r));

  // std::map keyed on the bitset keeps the enumeration order deterministic.
  std::map<Bits, char> closed;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    if (rows[r].none()) continue;
    std::vector<Bits> fresh{rows[r]};
    for (const auto& [cols, unused] : closed) {
      Bits meet = cols & rows[r];
      if (meet.any()) fresh.push_back(std::move(meet));
    }
    for (auto& f : fresh) closed.emplace(std::move(f), 0);
    if (deadline.expired()) return false;
  }

  out.clear();
  out.reserve(closed.size());
  for (const auto& [cols, unused] : closed) {
    std::vector<std::size_t> row_idx;
    for (std::size_t r = 0; r < b.rows(); ++r)
      if (cols.is_subset_of(rows[r])) row_idx.push_back(r);
    out.push_back(Rectangle{IndexSet(b.rows(), std::move(row_idx)), IndexSet(b.cols(), to_indices(cols))});
  }
  std::sort(out.begin(), out.end(), rectangle_less);
  return true;
}

class CoverSearch {
 public:
  CoverSearch(const SupportPattern& b, const std::vector<Rectangle>& rects, const Deadline& deadline)
      : rects_(rects), deadline_(deadline) {
    std::vector<std::size_t> cell_id(b.rows() * b.cols(), 0);
    std::size_t cells = 0;
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (b(r, c)) cell_id[r * b.cols() + c] = cells++;
    masks_.assign(rects.size(), Bits(cells));
    containing_.assign(cells, {});
    for (std::size_t k = 0; k < rects.size(); ++k) {
      for (std::size_t r : rects[k].rows)
        for (std::size_t c : rects[k].cols) masks_[k].set(cell_id[r * b.cols() + c]);
      max_area_ = std::max(max_area_, rects[k].area());
    }
    for (std::size_t k = 0; k < rects.size(); ++k)
      for (auto i = masks_[k].find_first(); i != Bits::npos; i = masks_[k].find_next(i))
        containing_[i].push_back(k);
    cells_ = cells;
  }

  void run(CoverResult& result) {
    best_ = greedy();
    Bits uncovered(cells_);
    uncovered.set();
    std::vector<std::size_t> chosen;
    timed_out_ = false;
    recurse(uncovered, chosen);
    result.size = best_.size();
    result.optimal = !timed_out_;
    result.nodes = nodes_;
    result.cover.clear();
    for (std::size_t k : best_) result.cover.push_back(rects_[k]);
  }

 private:
  std::vector<std::size_t> greedy() const {
    Bits uncovered(cells_);
    uncovered.set();
    std::vector<std::size_t> picked;
    while (uncovered.any()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t k = 0; k < masks_.size(); ++k) {
        const std::size_t g = (masks_[k] & uncovered).count();
        if (g > gain) {
          gain = g;
          best = k;
        }
      }
      picked.push_back(best);
      uncovered -= masks_[best];
    }
    return picked;
  }

  void recurse(const Bits& uncovered, std::vector<std::size_t>& chosen) {
    ++nodes_;
    if ((nodes_ & 1023) == 0 && deadline_.expired()) timed_out_ = true;
    if (timed_out_) return;
    const std::size_t left = uncovered.count();
    if (left == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const std::size_t bound = chosen.size() + (left + max_area_ - 1) / max_area_;
    if (bound >= best_.size()) return;

    // Branch on the uncovered cell with the fewest covering rectangles.
    std::size_t pick = Bits::npos, fewest = SIZE_MAX;
    for (auto i = uncovered.find_first(); i != Bits::npos; i = uncovered.find_next(i)) {
      if (containing_[i].size() < fewest) {
        fewest = containing_[i].size();
        pick = i;
      }
    }
    for (std::size_t k : containing_[pick]) {
      chosen.push_back(k);
      recurse(uncovered - masks_[k], chosen);
      chosen.pop_back();
      if (timed_out_ || chosen.size() + 1 >= best_.size()) return;
    }
  }

  const std::vector<Rectangle>& rects_;
  const Deadline& deadline_;
  std::vector<Bits> masks_;
  std::vector<std::vector<std::size_t>> containing_;
  std::size_t cells_ = 0;
  std::size_t max_area_ = 1;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

std::size_t SupportPattern::count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

std::vector<std::size_t> SupportPattern::row_support(std::size_t r) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(r, c)) out.push_back(c);
  return out;
}

SupportPattern support_pattern(const Matrix& a) {
  SupportPattern p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) p.set(i, j);
  return p;
}

std::vector<Rectangle> maximal_rectangles(const SupportPattern& b) {
  std::vector<Rectangle> out;
  enumerate_maximal(b, Deadline(std::nullopt), out);
  return out;
}

CoverResult rectangle_cover(const SupportPattern& b, const CoverOptions& options) {
  CoverResult result;
  if (b.count() == 0) return result;
  const Deadline deadline(options.time_limit);
  std::vector<Rectangle> rects;
  if (!enumerate_maximal(b, deadline, rects)) {
    // Fall back to one rectangle per nonzero row: a valid but unproven cover.
    for (std::size_t r = 0; r < b.rows(); ++r) {
      auto cols = b.row_support(r);
      if (cols.empty()) continue;
      result.cover.push_back(Rectangle{IndexSet(b.rows(), {r}), IndexSet(b.cols(), std::move(cols))});
    }
    result.size = result.cover.size();
    result.optimal = false;
    return result;
  }
  result.maximal_rectangles = rects.size();
  CoverSearch search(b, rects, deadline);
  search.run(result);
  return result;
}

std::size_t rectangle_cover_number(const SupportPattern& b) { return rectangle_cover(b).size; }

}  // namespace sqzero
