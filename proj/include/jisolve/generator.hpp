#pragma once

#include <cstdint>

#include "jisolve/colored_graph.hpp"
#include "jisolve/oracle.hpp"

namespace jis {

struct GenParams {
  std::size_t n = 0;
  int c = 1;
  int gamma = 1;
  double color_prob = 0.5;
  Weight weight_max = 10;
  std::uint64_t seed = 0;

  // Throws InputError on c < 1, gamma < 1, color_prob outside (0, 1] or
  // weight_max < 1.
  void validate() const;
};

// Endpoints uniform in [1, c] (swapped when start > end), each color 1..gamma
// kept with probability color_prob (an empty list is drawn again), weight
// uniform in [1, weight_max]. Deterministic in the seed.
ColoredIntervalGraph gen_cisl(const GenParams& p);

// Two independent endpoint draws over the same n vertices. Weights are drawn
// from [1, weight_max] when `weighted`, otherwise all one.
TwoUnionInstance gen_two_union(const GenParams& p, std::int64_t k = 0, bool weighted = false);

// 3-SAT to 2-union: every clause becomes a clique of its literals in the
// second graph, every variable with m occurrences a 2m-cycle alternating
// between the graphs, and each literal vertex is tied by a first-graph edge
// to a T or F vertex of its variable. The result has an independent set of
// size k = m + sum of occurrences iff the formula is satisfiable. The first
// graph is a union of 3-vertex paths, the second a union of cliques of size
// at most 3. Variables without occurrences get no gadget.
TwoUnionInstance reduce_sat3(const Cnf3& f);

}  // namespace jis
