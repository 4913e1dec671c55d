#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jisolve/colored_graph.hpp"
#include "jisolve/solution.hpp"

namespace jis {

struct DpOptions {
  int max_gamma = 25;         // reference DP limit
  int max_q = 30;             // live-slot DP limit
  bool unit_weights = false;  // maximize cardinality instead of weight
};

enum class DpMode { kValue, kWitness };

struct DpResult {
  Weight value = 0;
  std::optional<Solution> witness;  // set in kWitness mode
  int q = 0;
  std::size_t table_entries = 0;    // value cells allocated
  std::size_t decision_entries = 0; // witness cells allocated
};

// Reference dynamic program over all subsets of the gamma colors.
// Throws LimitError when gamma exceeds opts.max_gamma.
Weight solve_dp_gamma(const ColoredIntervalGraph& g, const DpOptions& opts = {});

// Live-slot dynamic program. Subsets are encoded over the Q slots of the
// LiveColorIndex rather than raw colors, so each row has 2^Q cells. Value
// mode keeps a ring of (ell + 2) rows; witness mode additionally stores a
// decision per cell for every position and walks it forward afterwards.
// Throws LimitError when Q exceeds opts.max_q.
DpResult solve_dp_q(const ColoredIntervalGraph& g, DpMode mode = DpMode::kValue,
                    const DpOptions& opts = {});

// Is there a colorful independent set with at least k vertices?
bool decide(const ColoredIntervalGraph& g, std::int64_t k);

// Every row of the live-slot table, indexed [p - 1][mask] for p in 1..c+1.
// Cell (p, mask) is the best weight using vertices starting at >= p whose
// colors lie in the colors never started before p plus the live colors whose
// slot bit is set. For inspection on small instances.
std::vector<std::vector<Weight>> dp_q_table(const ColoredIntervalGraph& g,
                                            const DpOptions& opts = {});

}  // namespace jis
