#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>

#include "jisolve/colored_graph.hpp"

namespace jis {

namespace {

void fill_csr(std::size_t positions, const std::vector<std::pair<Position, ColorId>>& items,
              std::vector<std::size_t>& offset, std::vector<ColorId>& data) {
  offset.assign(positions + 1, 0);
  for (const auto& [p, c] : items) ++offset[p + 1];
  for (std::size_t i = 1; i < offset.size(); ++i) offset[i] += offset[i - 1];
  data.resize(items.size());
  std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
  for (const auto& [p, c] : items) data[fill[p]++] = c;
}

}  // namespace

LiveColorIndex::LiveColorIndex(const ColoredIntervalGraph& g) {
  c_ = g.rep().compactness();
  const std::size_t gamma = g.num_colors();
  windows_.assign(gamma, Window{c_ + 1, 0});
  for (VertexId v = 0; v < g.size(); ++v) {
    const Position s = g.rep()[v].start;
    for (ColorId col : g.colors(v)) {
      windows_[col].first_start = std::min(windows_[col].first_start, s);
      windows_[col].last_start = std::max(windows_[col].last_start, s);
    }
  }

  // Positions 0..c+1 are addressable; colors are listed in ascending id.
  std::vector<std::pair<Position, ColorId>> born, died;
  for (ColorId col = 0; col < gamma; ++col) {
    born.emplace_back(windows_[col].first_start, col);
    died.emplace_back(windows_[col].last_start, col);
  }
  fill_csr(static_cast<std::size_t>(c_) + 2, born, birth_offset_, birth_data_);
  fill_csr(static_cast<std::size_t>(c_) + 2, died, death_offset_, death_data_);

  // Greedy interval coloring of the windows: smallest free slot first.
  slots_.assign(gamma, -1);
  std::priority_queue<int, std::vector<int>, std::greater<>> free_slots;
  int next_slot = 0;
  int live = 0;
  for (Position p = 1; p <= c_; ++p) {
    for (ColorId col : births(p)) {
      if (free_slots.empty()) {
        slots_[col] = next_slot++;
      } else {
        slots_[col] = free_slots.top();
        free_slots.pop();
      }
      ++live;
    }
    q_ = std::max(q_, live);
    for (ColorId col : deaths(p)) {
      free_slots.push(slots_[col]);
      --live;
    }
  }
  assert(next_slot == q_);
}

void LiveColorIndex::step_back(std::vector<ColorId>& occ, Position p) const {
  for (ColorId col : births(p + 1)) occ[slots_[col]] = kNone;
  for (ColorId col : deaths(p)) occ[slots_[col]] = col;
}

void LiveColorIndex::step_forward(std::vector<ColorId>& occ, Position p) const {
  for (ColorId col : deaths(p)) occ[slots_[col]] = kNone;
  for (ColorId col : births(p + 1)) occ[slots_[col]] = col;
}

}  // namespace jis
