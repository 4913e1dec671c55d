#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jisolve/colored_graph.hpp"
#include "jisolve/solution.hpp"

namespace jis {

// Intervals starting no later than the earliest end point, and their colors.
struct FirstClique {
  std::vector<VertexId> members;  // ascending
  std::vector<ColorId> colors;    // ascending
};

// Throws InputError on an empty graph.
FirstClique first_clique(const ColoredIntervalGraph& g);

struct BranchOptions {
  // Accept list-colored input. The first-clique argument only holds for single
  // colors, so list mode falls back to include/exclude branching on the
  // first-ending interval: still exact, but without the Gamma^k node bound.
  bool allow_lists = false;
};

struct BranchResult {
  std::optional<Solution> solution;
  std::uint64_t nodes = 0;  // search-tree nodes visited
};

// Search tree for a size-k colorful independent set. For each color of the
// first clique, commits that color's first-ending member and recurses on the
// intervals starting after it ends. Depth <= k, fan-out <= Gamma.
// Throws PreconditionError on weighted input, or on list colors unless
// opts.allow_lists is set.
BranchResult solve_branch(const ColoredIntervalGraph& g, std::int64_t k,
                          const BranchOptions& opts = {});

}  // namespace jis
