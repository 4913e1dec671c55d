#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "jisolve/colored_graph.hpp"
#include "jisolve/solution.hpp"

namespace jis {

// Brute-force ground truth. None of this shares code with the solvers: the
// intersection and color tests are re-derived here from raw endpoints.

constexpr std::size_t kBruteLimit = 24;

// Exact maximum-weight colorful independent set by include-first enumeration
// over vertex ids with bound pruning. Among optima the first one reached is
// returned. Throws LimitError for more than kBruteLimit vertices.
Solution brute_max_cis(const ColoredIntervalGraph& g, bool unit_weights = false);

// Exact maximum-weight independent set of the edge-wise union.
Solution brute_two_union(const TwoUnionInstance& t, bool unit_weights = false);

using Point4 = std::array<std::int64_t, 4>;

// Indices of the maxima of `points` (no other point is >= in every coordinate
// and different); among equal points only the lowest index survives. O(n^2).
std::vector<std::size_t> brute_pareto(const std::vector<Point4>& points);

// CNF formula with at most three distinct variables per clause. Literals are
// +v / -v for variables 1..num_vars.
struct Cnf3 {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  // Throws InputError on empty or oversized clauses, out-of-range literals,
  // or a variable repeated inside one clause.
  void validate() const;
};

bool sat3_satisfiable(const Cnf3& f);

}  // namespace jis
