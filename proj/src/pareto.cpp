#include "jisolve/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace jis {

namespace {

// Prefix-max Fenwick tree; index 0 is the largest z.
class MaxFenwick {
 public:
  explicit MaxFenwick(std::size_t n) : tree_(n + 1, kEmpty) {}

  void raise(std::size_t i, std::int64_t value) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] = std::max(tree_[i], value);
  }
  std::int64_t prefix_max(std::size_t i) const {
    std::int64_t best = kEmpty;
    for (++i; i > 0; i -= i & (~i + 1)) best = std::max(best, tree_[i]);
    return best;
  }
  void clear(std::size_t i) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] = kEmpty;
  }

  static constexpr std::int64_t kEmpty = std::numeric_limits<std::int64_t>::min();

 private:
  std::vector<std::int64_t> tree_;
};

class Maxima {
 public:
  explicit Maxima(std::vector<Point4> pts) : pts_(std::move(pts)), dominated_(pts_.size(), 0) {
    std::vector<std::int64_t> zs;
    for (const auto& p : pts_) zs.push_back(p[2]);
    std::sort(zs.begin(), zs.end(), std::greater<>());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    z_rank_.reserve(pts_.size());
    for (const auto& p : pts_) {
      z_rank_.push_back(static_cast<std::size_t>(
          std::lower_bound(zs.begin(), zs.end(), p[2], std::greater<>()) - zs.begin()));
    }
    bit_ = MaxFenwick(zs.size());
  }

  // pts_ must be distinct and sorted lexicographically descending.
  const std::vector<char>& run() {
    solve(0, pts_.size());
    return dominated_;
  }

 private:
  void solve(std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    solve(lo, mid);
    solve(mid, hi);

    // Left half dominates right-half points that it beats on y, z and w.
    std::vector<std::size_t> idx(hi - lo);
    std::iota(idx.begin(), idx.end(), lo);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (pts_[a][1] != pts_[b][1]) return pts_[a][1] > pts_[b][1];
      return (a < mid) > (b < mid);
    });
    for (std::size_t i : idx) {
      if (i < mid) {
        bit_.raise(z_rank_[i], pts_[i][3]);
      } else if (!dominated_[i] && bit_.prefix_max(z_rank_[i]) >= pts_[i][3]) {
        dominated_[i] = 1;
      }
    }
    for (std::size_t i = lo; i < mid; ++i) bit_.clear(z_rank_[i]);
  }

  std::vector<Point4> pts_;
  std::vector<char> dominated_;
  std::vector<std::size_t> z_rank_;
  MaxFenwick bit_{0};
};

}  // namespace

std::vector<std::size_t> pareto_survivors_4d(const std::vector<Point4>& points) {
  std::vector<std::size_t> ids(points.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  // Lexicographically descending; equal points keep the lowest index first.
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    if (points[a] != points[b]) return points[a] > points[b];
    return a < b;
  });
  std::vector<std::size_t> distinct;
  for (std::size_t i : ids) {
    if (distinct.empty() || points[distinct.back()] != points[i]) distinct.push_back(i);
  }

  std::vector<Point4> sorted;
  sorted.reserve(distinct.size());
  for (std::size_t i : distinct) sorted.push_back(points[i]);
  Maxima maxima(std::move(sorted));
  const auto& dominated = maxima.run();

  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < distinct.size(); ++j) {
    if (!dominated[j]) out.push_back(distinct[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jis
