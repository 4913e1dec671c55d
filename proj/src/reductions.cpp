#include "jisolve/reductions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "jisolve/error.hpp"
#include "jisolve/pareto.hpp"

namespace jis {

Signature signature(const TwoUnionInstance& t, VertexId v) {
  const Interval& i1 = t.rep1[v];
  const Interval& i2 = t.rep2[v];
  return {-i1.start, i1.end, -i2.start, i2.end};
}

SignatureReduction signature_reduce(const TwoUnionInstance& t) {
  const std::size_t n = t.rep1.size();
  if (t.rep2.size() != n) throw InputError("2-union sides have different vertex counts");
  if (!t.weights.empty() && t.weights.size() != n) {
    throw InputError("weights do not match vertex count");
  }
  auto weight = [&](VertexId v) { return t.weights.empty() ? Weight{1} : t.weights[v]; };

  bool uniform = true;
  for (VertexId v = 1; v < n; ++v) uniform = uniform && weight(v) == weight(0);

  std::vector<VertexId> kept;
  if (uniform) {
    // Minimal signatures are the maxima of the negated ones.
    std::vector<Point4> pts(n);
    for (VertexId v = 0; v < n; ++v) {
      const Signature s = signature(t, v);
      pts[v] = {-s.a, -s.b, -s.a2, -s.b2};
    }
    for (std::size_t i : pareto_survivors_4d(pts)) kept.push_back(static_cast<VertexId>(i));
  } else {
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    auto key = [&](VertexId v) {
      const Signature s = signature(t, v);
      return std::array<std::int64_t, 4>{s.a, s.b, s.a2, s.b2};
    };
    std::sort(ids.begin(), ids.end(), [&](VertexId x, VertexId y) {
      if (key(x) != key(y)) return key(x) < key(y);
      if (weight(x) != weight(y)) return weight(x) > weight(y);
      return x < y;
    });
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i == 0 || key(ids[i]) != key(ids[i - 1])) kept.push_back(ids[i]);
    }
    std::sort(kept.begin(), kept.end());
  }

  SignatureReduction out;
  IntervalSet g1, g2;
  std::vector<Weight> ws;
  std::vector<char> keep_flag(n, 0);
  for (VertexId v : kept) {
    keep_flag[v] = 1;
    g1.push_back(t.rep1[v]);
    g2.push_back(t.rep2[v]);
    ws.push_back(weight(v));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!keep_flag[v]) out.removed.push_back(v);
  }
  out.instance = TwoUnionInstance::build(g1, g2, t.k, std::move(ws));
  out.kept = std::move(kept);
  return out;
}

namespace {

// Earliest-end greedy maximum independent set of the given vertices.
std::vector<VertexId> greedy_packing(const ColoredIntervalGraph& g, std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end(), [&](VertexId x, VertexId y) {
    if (g.rep()[x].end != g.rep()[y].end) return g.rep()[x].end < g.rep()[y].end;
    return x < y;
  });
  std::vector<VertexId> out;
  Position last = 0;
  for (VertexId v : vs) {
    if (g.rep()[v].start > last) {
      out.push_back(v);
      last = g.rep()[v].end;
    }
  }
  return out;
}

void require_proper_jisp(const ColoredIntervalGraph& g) {
  if (!is_proper_graph(g.rep())) throw PreconditionError("color packing requires a proper interval graph");
  if (!g.has_singleton_colors()) {
    throw PreconditionError("color packing requires single-colored vertices (JISP)");
  }
  if (!g.has_unit_weights()) throw PreconditionError("color packing is unweighted");
}

}  // namespace

ColorPackResult color_pack_reduce(const ColoredIntervalGraph& g, std::int64_t k) {
  require_proper_jisp(g);
  if (k < 0) throw InputError("negative k");

  std::vector<std::vector<VertexId>> by_color(g.num_colors());
  for (VertexId v = 0; v < g.size(); ++v) by_color[g.colors(v)[0]].push_back(v);
  std::vector<std::vector<VertexId>> packing(g.num_colors());
  for (ColorId c = 0; c < g.num_colors(); ++c) packing[c] = greedy_packing(g, by_color[c]);

  std::vector<ColorId> order(g.num_colors());
  std::iota(order.begin(), order.end(), ColorId{0});
  std::stable_sort(order.begin(), order.end(), [&](ColorId x, ColorId y) {
    return packing[x].size() > packing[y].size();
  });

  ColorPackResult r;
  r.k = k;
  std::vector<char> removed(g.num_colors(), 0);
  for (ColorId c : order) {
    if (r.k == 0 || static_cast<std::int64_t>(packing[c].size()) < 2 * r.k - 1) break;
    removed[c] = 1;
    r.steps.push_back({g.label(c), r.k, packing[c]});
    --r.k;
  }

  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (!removed[g.colors(v)[0]]) keep.push_back(v);
  }
  if (r.steps.empty()) {
    r.graph = g;
    r.kept = std::move(keep);
  } else {
    Subgraph sub = induced_subgraph(g, std::move(keep));
    r.graph = std::move(sub.graph);
    r.kept = std::move(sub.kept);
  }
  return r;
}

std::vector<VertexId> lift_color_pack(const ColoredIntervalGraph& g, const ColorPackResult& r,
                                      std::vector<VertexId> solution) {
  std::sort(solution.begin(), solution.end());
  for (auto step = r.steps.rbegin(); step != r.steps.rend(); ++step) {
    // Each chosen interval meets at most two packed ones (no claws), so
    // k_before - 1 picks leave at least one of the 2 k_before - 1 free.
    solution.resize(std::min<std::size_t>(solution.size(),
                                          static_cast<std::size_t>(step->k_before - 1)));
    auto free_one = std::find_if(step->packing.begin(), step->packing.end(), [&](VertexId p) {
      return std::none_of(solution.begin(), solution.end(),
                          [&](VertexId s) { return g.rep()[s].intersects(g.rep()[p]); });
    });
    if (free_one == step->packing.end()) throw std::logic_error("color packing lift failed");
    solution.push_back(*free_one);
    std::sort(solution.begin(), solution.end());
  }
  return solution;
}

KernelOutcome kernelize_proper(const ColoredIntervalGraph& g, std::int64_t k) {
  ColorPackResult packed = color_pack_reduce(g, k);
  KernelOutcome out;

  Solution greedy = greedy_maximal_cis(packed.graph);
  if (static_cast<std::int64_t>(greedy.vertices.size()) >= packed.k) {
    std::vector<VertexId> picks;
    for (std::size_t i = 0; i < static_cast<std::size_t>(packed.k); ++i) {
      picks.push_back(packed.kept[greedy.vertices[i]]);
    }
    out.kind = KernelOutcome::Kind::kSolvedYes;
    out.certificate = make_solution(g, lift_color_pack(g, packed, std::move(picks)), true);
    if (auto bad = find_violation(g, out.certificate.vertices)) {
      throw std::logic_error("kernel certificate invalid: " + *bad);
    }
    return out;
  }

  const auto kk = static_cast<std::uint64_t>(packed.k);
  out.kind = KernelOutcome::Kind::kReduced;
  out.bound = 4 * kk * kk * max_clique_size(packed.graph.rep());
  if (packed.graph.size() > out.bound) {
    throw std::logic_error("proper kernel has " + std::to_string(packed.graph.size()) +
                           " vertices, above 4k^2*omega = " + std::to_string(out.bound));
  }
  out.graph = std::move(packed.graph);
  out.k = packed.k;
  out.kept = std::move(packed.kept);
  return out;
}

Solution greedy_maximal_cis(const ColoredIntervalGraph& g) {
  std::vector<VertexId> order(g.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
    if (g.rep()[x].end != g.rep()[y].end) return g.rep()[x].end < g.rep()[y].end;
    return x < y;
  });
  std::vector<char> used(g.num_colors(), 0);
  std::vector<VertexId> picked;
  Position last = 0;
  for (VertexId v : order) {
    if (g.rep()[v].start <= last) continue;
    auto cols = g.colors(v);
    if (std::any_of(cols.begin(), cols.end(), [&](ColorId c) { return used[c]; })) continue;
    for (ColorId c : cols) used[c] = 1;
    picked.push_back(v);
    last = g.rep()[v].end;
  }
  return make_solution(g, std::move(picked));
}

}  // namespace jis
