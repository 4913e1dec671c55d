#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jisolve/colored_graph.hpp"

namespace jis {

// A set of vertices claimed to be a colorful independent set.
struct Solution {
  std::vector<VertexId> vertices;  // ascending
  Weight value = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Builds a Solution from vertex ids, summing weights (or counting when unit).
Solution make_solution(const ColoredIntervalGraph& g, std::vector<VertexId> vertices,
                       bool unit_weights = false);

// First violated constraint, or nullopt when `vertices` is a colorful
// independent set of g. Color clashes are reported before interval overlaps;
// messages name vertex ids, e.g.
// "intervals 0 and 1 intersect" or "colors of 1 and 2 intersect".
std::optional<std::string> find_violation(const ColoredIntervalGraph& g,
                                          const std::vector<VertexId>& vertices);

// Same for a 2-union instance: disjoint in both representations.
std::optional<std::string> find_violation(const TwoUnionInstance& t,
                                          const std::vector<VertexId>& vertices);

}  // namespace jis
