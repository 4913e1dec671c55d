#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jisolve/colored_graph.hpp"
#include "jisolve/solution.hpp"

namespace jis {

struct CcConfig {
  std::int64_t k = 1;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> max_trials_override;
  // Debug fallback: try every map [gamma] -> [k] instead of random ones.
  bool exhaustive_recolorings = false;

  // Throws InputError unless 0 < epsilon < 1 and k >= 1.
  void validate() const;
};

// ceil(|ln eps| * k^k / k!), at least 1. Computed through lgamma.
std::uint64_t trials_needed(std::int64_t k, double epsilon);

// Maps every vertex's single color c to delta[c]. delta holds one entry per
// color of g, each in [0, k). Unused targets drop out through renumbering.
// Throws PreconditionError on list-colored input.
ColoredIntervalGraph recolor(const ColoredIntervalGraph& g, const std::vector<ColorId>& delta);

// Recoloring for trial `trial`, drawn uniformly from [k]^[gamma] using a
// stream keyed by (seed, trial).
std::vector<ColorId> draw_recoloring(std::size_t gamma, std::int64_t k, std::uint64_t seed,
                                     std::uint64_t trial);

struct CcResult {
  std::optional<Solution> solution;  // validated against the original coloring
  std::uint64_t trials_run = 0;
};

// Randomized color coding for JISP: recolor into k colors, run the DP with
// witness, stop at the first trial that reaches k. Never reports a solution
// that is invalid for the input graph.
// Throws PreconditionError on weighted or list-colored input.
CcResult solve_cc(const ColoredIntervalGraph& g, const CcConfig& cfg);

}  // namespace jis
