#include "jisolve/branch.hpp"

#include <algorithm>
#include <limits>

#include "jisolve/error.hpp"

namespace jis {

FirstClique first_clique(const ColoredIntervalGraph& g) {
  if (g.empty()) throw InputError("first clique of an empty graph");
  Position earliest_end = std::numeric_limits<Position>::max();
  for (const Interval& iv : g.rep().intervals()) earliest_end = std::min(earliest_end, iv.end);
  FirstClique fc;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.rep()[v].start <= earliest_end) {
      fc.members.push_back(v);
      fc.colors.insert(fc.colors.end(), g.colors(v).begin(), g.colors(v).end());
    }
  }
  std::sort(fc.colors.begin(), fc.colors.end());
  fc.colors.erase(std::unique(fc.colors.begin(), fc.colors.end()), fc.colors.end());
  return fc;
}

namespace {

class SearchTree {
 public:
  explicit SearchTree(const ColoredIntervalGraph& g)
      : g_(g), order_(g.rep().order().begin(), g.rep().order().end()), used_(g.num_colors(), 0) {
    starts_.reserve(order_.size());
    for (VertexId v : order_) starts_.push_back(g.rep()[v].start);
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<VertexId>& picked() const { return picked_; }

  // Single-colored vertices: branch on the colors of the first clique.
  bool jisp(Position bound, std::int64_t k) {
    ++nodes_;
    if (k == 0) return true;
    const std::size_t first = first_after(bound);

    Position min_end = std::numeric_limits<Position>::max();
    for (std::size_t i = first; i < order_.size(); ++i) {
      if (alive(order_[i])) min_end = std::min(min_end, g_.rep()[order_[i]].end);
    }
    if (min_end == std::numeric_limits<Position>::max()) return false;

    // First-ending K-member per color (ties: smallest id).
    std::vector<std::pair<ColorId, VertexId>> best;
    for (std::size_t i = first; i < order_.size() && starts_[i] <= min_end; ++i) {
      const VertexId v = order_[i];
      if (!alive(v)) continue;
      const ColorId col = g_.colors(v)[0];
      auto it = std::find_if(best.begin(), best.end(), [&](const auto& b) { return b.first == col; });
      if (it == best.end()) {
        best.emplace_back(col, v);
      } else {
        const Interval& cur = g_.rep()[it->second];
        const Interval& cand = g_.rep()[v];
        if (cand.end < cur.end || (cand.end == cur.end && v < it->second)) it->second = v;
      }
    }
    std::sort(best.begin(), best.end());

    for (const auto& [col, v] : best) {
      used_[col] = 1;
      picked_.push_back(v);
      if (jisp(g_.rep()[v].end, k - 1)) return true;
      picked_.pop_back();
      used_[col] = 0;
    }
    return false;
  }

  // List colors: include or exclude the first-ending available interval.
  bool lists(Position bound, std::int64_t k) {
    ++nodes_;
    if (k == 0) return true;
    const std::size_t first = first_after(bound);
    std::int64_t available = 0;
    VertexId pivot = 0;
    Position pivot_end = std::numeric_limits<Position>::max();
    for (std::size_t i = first; i < order_.size(); ++i) {
      const VertexId v = order_[i];
      if (excluded_.size() && excluded_[v]) continue;
      if (!alive(v)) continue;
      ++available;
      const Position e = g_.rep()[v].end;
      if (e < pivot_end || (e == pivot_end && v < pivot)) {
        pivot = v;
        pivot_end = e;
      }
    }
    if (available < k) return false;

    for (ColorId col : g_.colors(pivot)) used_[col] = 1;
    picked_.push_back(pivot);
    if (lists(pivot_end, k - 1)) return true;
    picked_.pop_back();
    for (ColorId col : g_.colors(pivot)) used_[col] = 0;

    excluded_[pivot] = 1;
    const bool found = lists(bound, k);
    excluded_[pivot] = 0;
    return found;
  }

  void enable_exclusion() { excluded_.assign(g_.size(), 0); }

 private:
  std::size_t first_after(Position bound) const {
    return static_cast<std::size_t>(std::upper_bound(starts_.begin(), starts_.end(), bound) -
                                    starts_.begin());
  }

  bool alive(VertexId v) const {
    for (ColorId col : g_.colors(v)) {
      if (used_[col]) return false;
    }
    return true;
  }

  const ColoredIntervalGraph& g_;
  std::vector<VertexId> order_;
  std::vector<Position> starts_;
  std::vector<char> used_;
  std::vector<char> excluded_;
  std::vector<VertexId> picked_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BranchResult solve_branch(const ColoredIntervalGraph& g, std::int64_t k,
                          const BranchOptions& opts) {
  if (!g.has_unit_weights()) throw PreconditionError("branch solver is unweighted");
  const bool singleton = g.has_singleton_colors();
  if (!singleton && !opts.allow_lists) {
    throw PreconditionError("branch solver requires single-colored vertices (JISP)");
  }
  if (k < 0) throw InputError("negative k");

  SearchTree tree(g);
  bool found;
  if (singleton) {
    found = tree.jisp(0, k);
  } else {
    tree.enable_exclusion();
    found = tree.lists(0, k);
  }
  BranchResult result;
  result.nodes = tree.nodes();
  if (found) result.solution = make_solution(g, tree.picked(), true);
  return result;
}

}  // namespace jis
