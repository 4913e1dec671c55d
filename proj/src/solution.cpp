#include "jisolve/solution.hpp"

#include <algorithm>

namespace jis {

namespace {

std::optional<std::string> check_ids(std::size_t n, const std::vector<VertexId>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= n) return "vertex " + std::to_string(vs[i]) + " out of range";
    for (std::size_t j = 0; j < i; ++j) {
      if (vs[i] == vs[j]) return "vertex " + std::to_string(vs[i]) + " listed twice";
    }
  }
  return std::nullopt;
}

std::string pair_str(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return std::to_string(a) + " and " + std::to_string(b);
}

}  // namespace

Solution make_solution(const ColoredIntervalGraph& g, std::vector<VertexId> vertices,
                       bool unit_weights) {
  std::sort(vertices.begin(), vertices.end());
  Solution s;
  for (VertexId v : vertices) s.value += unit_weights ? 1 : g.weight(v);
  s.vertices = std::move(vertices);
  return s;
}

std::optional<std::string> find_violation(const ColoredIntervalGraph& g,
                                          const std::vector<VertexId>& vertices) {
  if (auto bad = check_ids(g.size(), vertices)) return bad;
  std::vector<VertexId> vs = vertices;
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto a = g.colors(vs[i]);
      auto b = g.colors(vs[j]);
      std::vector<ColorId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) return "colors of " + pair_str(vs[i], vs[j]) + " intersect";
    }
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.rep()[vs[i]].intersects(g.rep()[vs[j]])) {
        return "intervals " + pair_str(vs[i], vs[j]) + " intersect";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> find_violation(const TwoUnionInstance& t,
                                          const std::vector<VertexId>& vertices) {
  if (auto bad = check_ids(t.size(), vertices)) return bad;
  std::vector<VertexId> vs = vertices;
  std::sort(vs.begin(), vs.end());
  for (int side = 1; side <= 2; ++side) {
    const CompactRep& r = side == 1 ? t.rep1 : t.rep2;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (r[vs[i]].intersects(r[vs[j]])) {
          return "intervals " + pair_str(vs[i], vs[j]) + " intersect in g" + std::to_string(side);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace jis
