#pragma once

#include <cstdint>
#include <vector>

#include "jisolve/colored_graph.hpp"
#include "jisolve/solution.hpp"

namespace jis {

// (-start, end, -start', end'); primes refer to the second representation.
struct Signature {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t a2 = 0;
  std::int64_t b2 = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  bool leq(const Signature& o) const { return a <= o.a && b <= o.b && a2 <= o.a2 && b2 <= o.b2; }
};

Signature signature(const TwoUnionInstance& t, VertexId v);

struct SignatureReduction {
  TwoUnionInstance instance;      // recompactified
  std::vector<VertexId> kept;     // new vertex i is old vertex kept[i]
  std::vector<VertexId> removed;  // ascending
};

// Deletes every vertex whose signature is >= another vertex's signature,
// keeping one survivor per signature class (highest weight, then lowest id).
// With non-uniform weights a dominated vertex may be the heavier one, so only
// the per-class deduplication is applied; that leaves at most c^4 vertices.
// Throws InputError when the two sides differ in size.
SignatureReduction signature_reduce(const TwoUnionInstance& t);

struct ColorPackStep {
  ColorId color;                  // label in the input graph
  std::int64_t k_before;
  std::vector<VertexId> packing;  // disjoint intervals of that color, input ids
};

struct ColorPackResult {
  ColoredIntervalGraph graph;
  std::int64_t k = 0;
  std::vector<VertexId> kept;  // new vertex i is input vertex kept[i]
  std::vector<ColorPackStep> steps;
};

// Removes a color whose intervals hold at least 2k-1 pairwise disjoint ones
// and decrements k, until no color qualifies or k reaches 0. Colors are
// visited by decreasing packing size, which makes one pass exhaustive.
// Throws PreconditionError unless the graph is proper, single-colored and
// unweighted.
ColorPackResult color_pack_reduce(const ColoredIntervalGraph& g, std::int64_t k);

// Turns a colorful independent set of size >= r.k in r.graph, given in the
// ids of the input graph g, into one of size >= the original k in g.
std::vector<VertexId> lift_color_pack(const ColoredIntervalGraph& g, const ColorPackResult& r,
                                      std::vector<VertexId> solution);

// Earliest-end greedy: takes every interval that starts after the last pick
// and brings only unused colors. The result is maximal.
Solution greedy_maximal_cis(const ColoredIntervalGraph& g);

struct KernelOutcome {
  enum class Kind { kSolvedYes, kReduced };
  Kind kind = Kind::kReduced;
  ColoredIntervalGraph graph;    // reduced instance when kReduced
  std::int64_t k = 0;            // k' when kReduced
  std::vector<VertexId> kept;    // reduced vertex i is input vertex kept[i]
  Solution certificate;          // input ids, size >= k, when kSolvedYes
  std::uint64_t bound = 0;       // 4 k'^2 omega' on the reduced instance
};

// Color packing followed by the greedy. A greedy set of size >= k' solves the
// instance; otherwise the reduced graph has at most 4 k'^2 omega' vertices
// (checked, std::logic_error on violation).
KernelOutcome kernelize_proper(const ColoredIntervalGraph& g, std::int64_t k);

// Maximum independent set of a 2-union of two cluster graphs via bipartite
// matching between the cliques of both sides. Each matched clique pair yields
// its lowest shared vertex.
// Throws PreconditionError on non-cluster or weighted input.
Solution solve_cluster_cluster(const TwoUnionInstance& t);

// Hopcroft-Karp on a bipartite graph given as left adjacency lists.
// Returns match_left (right vertex or -1 per left vertex).
std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_size);

}  // namespace jis
