#pragma once

#include <vector>

#include "jisolve/oracle.hpp"

namespace jis {

// Maxima of 4-dimensional points: indices of points that no other point
// dominates (>= everywhere and different). Equal points collapse to the one
// with the lowest index. Divide and conquer over the lexicographic order with
// a Fenwick-tree staircase for the remaining three coordinates,
// O(n log^2 n). Output is ascending and matches brute_pareto exactly.
std::vector<std::size_t> pareto_survivors_4d(const std::vector<Point4>& points);

}  // namespace jis
