#include "jisolve/dp.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "jisolve/error.hpp"

namespace jis {

namespace {

using Mask = std::uint32_t;
constexpr std::int32_t kSkip = -1;

void check_weight_sum(const ColoredIntervalGraph& g, bool unit) {
  if (unit) return;
  Weight total = 0;
  for (Weight w : g.weights()) {
    if (w > std::numeric_limits<Weight>::max() - total) {
      throw Error("total weight overflows 64-bit values");
    }
    total += w;
  }
}

// Vertex ids grouped by start position, ascending id inside a group.
std::vector<std::vector<VertexId>> batches_by_start(const CompactRep& r) {
  std::vector<std::vector<VertexId>> by_start(static_cast<std::size_t>(r.compactness()) + 2);
  for (VertexId v = 0; v < r.size(); ++v) by_start[r[v].start].push_back(v);
  return by_start;
}

struct Transfer {
  Mask persist = 0;  // slots whose color stays the same between the positions
  Mask fresh = 0;    // slots taken by a color born strictly after the first position
};

Transfer transfer(const ColorId* occ_from, const ColorId* occ_to, int q) {
  Transfer t;
  for (int s = 0; s < q; ++s) {
    if (occ_to[s] == LiveColorIndex::kNone) continue;
    if (occ_to[s] == occ_from[s]) {
      t.persist |= Mask{1} << s;
    } else {
      t.fresh |= Mask{1} << s;
    }
  }
  return t;
}

Mask slot_mask(const ColoredIntervalGraph& g, const LiveColorIndex& live, VertexId v) {
  Mask m = 0;
  for (ColorId c : g.colors(v)) m |= Mask{1} << live.slot(c);
  return m;
}

struct QTable {
  std::size_t width = 0;
  std::size_t ring = 0;
  std::vector<Weight> cells;
  Weight* row(Position p) { return cells.data() + static_cast<std::size_t>(p) % ring * width; }
};

// Fills the live-slot table from position c down to 1. `decisions`, when
// given, receives one entry per (position, mask) for positions 1..c.
// `on_row` is called with each finished row.
template <class OnRow>
void run_dp_q(const ColoredIntervalGraph& g, const LiveColorIndex& live, bool unit,
              QTable& table, std::vector<std::int32_t>* decisions, OnRow&& on_row) {
  const int q = live.q();
  const Position c = g.rep().compactness();
  const std::size_t width = table.width;
  const auto batches = batches_by_start(g.rep());

  std::vector<ColorId> occ(table.ring * static_cast<std::size_t>(q), LiveColorIndex::kNone);
  auto occ_at = [&](Position p) {
    return occ.data() + static_cast<std::size_t>(p) % table.ring * static_cast<std::size_t>(q);
  };

  std::fill_n(table.row(c + 1), width, Weight{0});
  std::fill_n(occ_at(c + 1), q, LiveColorIndex::kNone);
  on_row(c + 1, table.row(c + 1));

  std::vector<ColorId> scratch(static_cast<std::size_t>(q));
  for (Position p = c; p >= 1; --p) {
    std::copy_n(occ_at(p + 1), q, scratch.begin());
    live.step_back(scratch, p);
    std::copy_n(scratch.begin(), q, occ_at(p));

    Weight* cur = table.row(p);
    const Weight* nxt = table.row(p + 1);
    const Transfer skip = transfer(occ_at(p), occ_at(p + 1), q);
    for (Mask m = 0; m < width; ++m) cur[m] = nxt[(m & skip.persist) | skip.fresh];

    std::int32_t* dec = nullptr;
    if (decisions) {
      dec = decisions->data() + static_cast<std::size_t>(p - 1) * width;
      std::fill_n(dec, width, kSkip);
    }

    for (VertexId v : batches[p]) {
      const Position e = g.rep()[v].end;
      const Mask need = slot_mask(g, live, v);
      const Transfer take = transfer(occ_at(p), occ_at(e + 1), q);
      const Mask keep = take.persist & ~need;
      const Mask fresh = take.fresh;
      const Weight w = unit ? 1 : g.weight(v);
      const Weight* tgt = table.row(e + 1);
      if (dec) {
        const auto id = static_cast<std::int32_t>(v);
        for (Mask m = 0; m < width; ++m) {
          if ((m & need) != need) continue;
          const Weight cand = w + tgt[(m & keep) | fresh];
          if (cand > cur[m] || (cand == cur[m] && dec[m] == kSkip)) {
            cur[m] = cand;
            dec[m] = id;
          }
        }
      } else {
        for (Mask m = 0; m < width; ++m) {
          const Weight cand = (m & need) == need ? w + tgt[(m & keep) | fresh] : 0;
          cur[m] = std::max(cur[m], cand);
        }
      }
    }
    on_row(p, cur);
  }
}

std::vector<VertexId> walk_decisions(const ColoredIntervalGraph& g, const LiveColorIndex& live,
                                     const std::vector<std::int32_t>& decisions,
                                     std::size_t width) {
  const int q = live.q();
  const Position c = g.rep().compactness();
  std::vector<VertexId> picked;
  std::vector<ColorId> occ = live.empty_occupancy();
  for (ColorId col : live.births(1)) occ[live.slot(col)] = col;

  Mask m = static_cast<Mask>(width - 1);
  Position p = 1;
  std::vector<ColorId> ahead;
  while (p <= c) {
    const std::int32_t d = decisions[static_cast<std::size_t>(p - 1) * width + m];
    const Position target = d == kSkip ? p + 1 : g.rep()[static_cast<VertexId>(d)].end + 1;
    ahead = occ;
    for (Position x = p; x < target; ++x) live.step_forward(ahead, x);
    const Transfer t = transfer(occ.data(), ahead.data(), q);
    Mask need = 0;
    if (d != kSkip) {
      picked.push_back(static_cast<VertexId>(d));
      need = slot_mask(g, live, static_cast<VertexId>(d));
    }
    m = (m & t.persist & ~need) | t.fresh;
    occ.swap(ahead);
    p = target;
  }
  return picked;
}

void check_q(int q, const DpOptions& opts) {
  if (q > opts.max_q || q > 31) {
    throw LimitError("Q = " + std::to_string(q) + " exceeds the configured limit " +
                     std::to_string(opts.max_q));
  }
}

}  // namespace

Weight solve_dp_gamma(const ColoredIntervalGraph& g, const DpOptions& opts) {
  const std::size_t gamma = g.num_colors();
  if (gamma > static_cast<std::size_t>(opts.max_gamma) || gamma > 31) {
    throw LimitError("gamma too large for reference DP (gamma = " + std::to_string(gamma) + ")");
  }
  if (g.empty()) return 0;
  check_weight_sum(g, opts.unit_weights);

  const Position c = g.rep().compactness();
  const std::size_t width = std::size_t{1} << gamma;
  const std::size_t ring = static_cast<std::size_t>(max_length(g.rep())) + 2;
  std::vector<Weight> cells(ring * width, 0);
  auto row = [&](Position p) { return cells.data() + static_cast<std::size_t>(p) % ring * width; };

  std::vector<Mask> color_mask(g.size(), 0);
  for (VertexId v = 0; v < g.size(); ++v) {
    for (ColorId col : g.colors(v)) color_mask[v] |= Mask{1} << col;
  }
  const auto batches = batches_by_start(g.rep());

  std::fill_n(row(c + 1), width, Weight{0});
  for (Position p = c; p >= 1; --p) {
    Weight* cur = row(p);
    std::copy_n(row(p + 1), width, cur);
    for (VertexId v : batches[p]) {
      const Mask cm = color_mask[v];
      const Weight w = opts.unit_weights ? 1 : g.weight(v);
      const Weight* tgt = row(g.rep()[v].end + 1);
      for (Mask set = 0; set < width; ++set) {
        if ((set & cm) == cm) cur[set] = std::max(cur[set], w + tgt[set & ~cm]);
      }
    }
  }
  return row(1)[width - 1];
}

DpResult solve_dp_q(const ColoredIntervalGraph& g, DpMode mode, const DpOptions& opts) {
  DpResult result;
  if (g.empty()) {
    if (mode == DpMode::kWitness) result.witness = Solution{};
    return result;
  }
  check_weight_sum(g, opts.unit_weights);
  const LiveColorIndex live(g);
  result.q = live.q();
  check_q(result.q, opts);

  QTable table;
  table.width = std::size_t{1} << live.q();
  table.ring = static_cast<std::size_t>(max_length(g.rep())) + 2;
  table.cells.assign(table.ring * table.width, 0);
  result.table_entries = table.cells.size();

  std::vector<std::int32_t> decisions;
  if (mode == DpMode::kWitness) {
    decisions.resize(static_cast<std::size_t>(g.rep().compactness()) * table.width);
    result.decision_entries = decisions.size();
  }
  run_dp_q(g, live, opts.unit_weights, table, mode == DpMode::kWitness ? &decisions : nullptr,
           [](Position, const Weight*) {});
  result.value = table.row(1)[table.width - 1];

  if (mode == DpMode::kWitness) {
    result.witness = make_solution(g, walk_decisions(g, live, decisions, table.width),
                                   opts.unit_weights);
  }
  return result;
}

bool decide(const ColoredIntervalGraph& g, std::int64_t k) {
  if (k <= 0) return true;
  DpOptions opts;
  opts.unit_weights = true;
  return solve_dp_q(g, DpMode::kValue, opts).value >= k;
}

std::vector<std::vector<Weight>> dp_q_table(const ColoredIntervalGraph& g,
                                            const DpOptions& opts) {
  const Position c = g.rep().compactness();
  std::vector<std::vector<Weight>> rows(static_cast<std::size_t>(c) + 1);
  if (g.empty()) {
    rows[0] = {0};
    return rows;
  }
  check_weight_sum(g, opts.unit_weights);
  const LiveColorIndex live(g);
  check_q(live.q(), opts);
  QTable table;
  table.width = std::size_t{1} << live.q();
  table.ring = static_cast<std::size_t>(c) + 2;
  table.cells.assign(table.ring * table.width, 0);
  run_dp_q(g, live, opts.unit_weights, table, nullptr, [&](Position p, const Weight* row) {
    rows[static_cast<std::size_t>(p - 1)].assign(row, row + table.width);
  });
  return rows;
}

}  // namespace jis
