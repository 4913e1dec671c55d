#include "jisolve/colored_graph.hpp"

#include <algorithm>
#include <string>

#include "jisolve/error.hpp"

namespace jis {

ColoredIntervalGraph ColoredIntervalGraph::build(
    std::span<const Interval> intervals, const std::vector<std::vector<ColorId>>& color_labels,
    std::vector<Weight> weights) {
  const std::size_t n = intervals.size();
  if (color_labels.size() != n) throw InputError("color lists do not match vertex count");
  if (weights.empty()) weights.assign(n, 1);
  if (weights.size() != n) throw InputError("weights do not match vertex count");

  ColoredIntervalGraph g;
  g.rep_ = compactify(intervals).rep;

  for (const auto& list : color_labels) g.labels_.insert(g.labels_.end(), list.begin(), list.end());
  std::sort(g.labels_.begin(), g.labels_.end());
  g.labels_.erase(std::unique(g.labels_.begin(), g.labels_.end()), g.labels_.end());

  g.color_offset_.reserve(n + 1);
  for (VertexId v = 0; v < n; ++v) {
    if (color_labels[v].empty()) {
      throw InputError("vertex " + std::to_string(v) + " has an empty color list");
    }
    if (weights[v] < 0) throw InputError("vertex " + std::to_string(v) + " has negative weight");
    const std::size_t first = g.color_data_.size();
    for (ColorId label : color_labels[v]) {
      auto it = std::lower_bound(g.labels_.begin(), g.labels_.end(), label);
      g.color_data_.push_back(static_cast<ColorId>(it - g.labels_.begin()));
    }
    auto begin = g.color_data_.begin() + static_cast<std::ptrdiff_t>(first);
    std::sort(begin, g.color_data_.end());
    g.color_data_.erase(std::unique(begin, g.color_data_.end()), g.color_data_.end());
    g.color_offset_.push_back(g.color_data_.size());
  }
  g.weights_ = std::move(weights);
  return g;
}

bool ColoredIntervalGraph::has_unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 1; });
}

bool ColoredIntervalGraph::has_singleton_colors() const {
  for (VertexId v = 0; v < size(); ++v) {
    if (colors(v).size() != 1) return false;
  }
  return true;
}

ColoredIntervalGraph ColoredIntervalGraph::with_unit_weights() const {
  ColoredIntervalGraph g = *this;
  std::fill(g.weights_.begin(), g.weights_.end(), Weight{1});
  return g;
}

std::vector<std::vector<ColorId>> ColoredIntervalGraph::color_lists_as_labels() const {
  std::vector<std::vector<ColorId>> out(size());
  for (VertexId v = 0; v < size(); ++v) {
    for (ColorId c : colors(v)) out[v].push_back(labels_[c]);
  }
  return out;
}

Subgraph induced_subgraph(const ColoredIntervalGraph& g, std::vector<VertexId> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  IntervalSet ivs;
  std::vector<std::vector<ColorId>> cols;
  std::vector<Weight> ws;
  ivs.reserve(keep.size());
  cols.reserve(keep.size());
  ws.reserve(keep.size());
  for (VertexId v : keep) {
    if (v >= g.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
    ivs.push_back(g.rep()[v]);
    std::vector<ColorId> list;
    for (ColorId c : g.colors(v)) list.push_back(g.label(c));
    cols.push_back(std::move(list));
    ws.push_back(g.weight(v));
  }
  return {ColoredIntervalGraph::build(ivs, cols, std::move(ws)), std::move(keep)};
}

bool TwoUnionInstance::has_unit_weights() const {
  return std::all_of(weights.begin(), weights.end(), [](Weight w) { return w == 1; });
}

TwoUnionInstance TwoUnionInstance::build(std::span<const Interval> g1,
                                         std::span<const Interval> g2, std::int64_t k,
                                         std::vector<Weight> weights) {
  if (g1.size() != g2.size()) throw InputError("2-union sides have different vertex counts");
  if (weights.empty()) weights.assign(g1.size(), 1);
  if (weights.size() != g1.size()) throw InputError("weights do not match vertex count");
  for (Weight w : weights) {
    if (w < 0) throw InputError("negative weight");
  }
  if (k < 0) throw InputError("negative k");
  TwoUnionInstance t;
  t.rep1 = compactify(g1).rep;
  t.rep2 = compactify(g2).rep;
  t.k = k;
  t.weights = std::move(weights);
  return t;
}

int c_forall(const TwoUnionInstance& t) {
  return std::max(t.rep1.compactness(), t.rep2.compactness());
}

ColoredIntervalGraph two_union_to_cisl(const TwoUnionInstance& t, ColorSide side) {
  if (t.rep1.size() != t.rep2.size()) {
    throw InputError("2-union sides have different vertex counts");
  }
  bool color_second = true;
  if (side == ColorSide::kFirst) color_second = false;
  if (side == ColorSide::kAuto) color_second = t.rep2.compactness() <= t.rep1.compactness();
  const CompactRep& graph_side = color_second ? t.rep1 : t.rep2;
  const CompactRep& color_side = color_second ? t.rep2 : t.rep1;

  std::vector<std::vector<ColorId>> cols(t.size());
  for (VertexId v = 0; v < t.size(); ++v) {
    for (Position p = color_side[v].start; p <= color_side[v].end; ++p) {
      cols[v].push_back(static_cast<ColorId>(p));
    }
  }
  std::vector<Weight> ws = t.weights;
  if (ws.empty()) ws.assign(t.size(), 1);
  return ColoredIntervalGraph::build(graph_side.intervals(), cols, std::move(ws));
}

GraphStats stats(const ColoredIntervalGraph& g) {
  GraphStats s;
  s.n = g.size();
  s.c = g.rep().compactness();
  s.gamma = g.num_colors();
  s.q = LiveColorIndex(g).q();
  s.omega = max_clique_size(g.rep());
  s.ell = g.empty() ? 0 : max_length(g.rep());

  // Colors present at each position = maximal clique, via merged coverage per color.
  std::vector<std::vector<Interval>> per_color(s.gamma);
  for (VertexId v = 0; v < g.size(); ++v) {
    for (ColorId c : g.colors(v)) per_color[c].push_back(g.rep()[v]);
  }
  std::vector<std::int64_t> diff(static_cast<std::size_t>(s.c) + 2, 0);
  for (auto& ivs : per_color) {
    std::sort(ivs.begin(), ivs.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    std::size_t i = 0;
    while (i < ivs.size()) {
      Position lo = ivs[i].start, hi = ivs[i].end;
      ++i;
      while (i < ivs.size() && ivs[i].start <= hi + 1) hi = std::max(hi, ivs[i++].end);
      ++diff[lo];
      --diff[hi + 1];
    }
  }
  std::int64_t cur = 0;
  for (std::size_t p = 1; p < diff.size(); ++p) {
    cur += diff[p];
    s.Gamma = std::max(s.Gamma, static_cast<std::size_t>(cur));
  }
  return s;
}

}  // namespace jis
