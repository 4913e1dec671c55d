#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jisolve/interval.hpp"

namespace jis {

using ColorId = std::uint32_t;
using Weight = std::int64_t;

// A CISL instance: compact intervals with per-vertex color lists and weights.
//
// Colors are renumbered to 0..gamma-1 on construction, ordered by the labels
// they were given with; unused labels vanish. Lists are sorted and nonempty.
// JISP instances are the special case where every list has one color.
class ColoredIntervalGraph {
 public:
  ColoredIntervalGraph() = default;

  // Compactifies `intervals`. Throws InputError on empty color lists, negative
  // weights, or size mismatches. An empty `weights` means unit weights.
  static ColoredIntervalGraph build(std::span<const Interval> intervals,
                                    const std::vector<std::vector<ColorId>>& color_labels,
                                    std::vector<Weight> weights = {});

  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }
  const CompactRep& rep() const { return rep_; }
  std::size_t num_colors() const { return labels_.size(); }

  std::span<const ColorId> colors(VertexId v) const {
    return {color_data_.data() + color_offset_[v], color_data_.data() + color_offset_[v + 1]};
  }
  Weight weight(VertexId v) const { return weights_[v]; }
  std::span<const Weight> weights() const { return weights_; }

  // Label the color was constructed with.
  ColorId label(ColorId c) const { return labels_[c]; }
  std::span<const ColorId> labels() const { return labels_; }

  bool has_unit_weights() const;
  bool has_singleton_colors() const;

  // Same graph with every weight set to one.
  ColoredIntervalGraph with_unit_weights() const;

  // Color lists in original label space, per vertex.
  std::vector<std::vector<ColorId>> color_lists_as_labels() const;

 private:
  CompactRep rep_;
  std::vector<std::size_t> color_offset_{0};
  std::vector<ColorId> color_data_;
  std::vector<Weight> weights_;
  std::vector<ColorId> labels_;
};

// Induced subgraph on `keep` (original ids, any order). The new graph's vertex
// i is kept[i] of the old one, with kept sorted ascending.
struct Subgraph {
  ColoredIntervalGraph graph;
  std::vector<VertexId> kept;
};
Subgraph induced_subgraph(const ColoredIntervalGraph& g, std::vector<VertexId> keep);

// Two interval graphs on a shared vertex set; vertex i is the same job in both.
struct TwoUnionInstance {
  CompactRep rep1;
  CompactRep rep2;
  std::int64_t k = 0;
  std::vector<Weight> weights;  // one per vertex

  std::size_t size() const { return rep1.size(); }
  bool has_unit_weights() const;

  // Compactifies both sides. Throws InputError if the sides differ in length.
  static TwoUnionInstance build(std::span<const Interval> g1, std::span<const Interval> g2,
                                std::int64_t k, std::vector<Weight> weights = {});
};

// Largest compactness of the two sides.
int c_forall(const TwoUnionInstance& t);

enum class ColorSide { kAuto, kSecond, kFirst };

// CISL encoding of a 2-union instance: the graph side keeps its intervals,
// the color side turns each interval into the positions it covers.
// kAuto colors the side with the smaller compactness (ties: the second).
ColoredIntervalGraph two_union_to_cisl(const TwoUnionInstance& t,
                                       ColorSide side = ColorSide::kAuto);

// Per-color liveness windows over start positions and a slot assignment that
// packs simultaneously live colors into Q slots.
class LiveColorIndex {
 public:
  static constexpr ColorId kNone = static_cast<ColorId>(-1);

  struct Window {
    Position first_start = 0;
    Position last_start = 0;
  };

  explicit LiveColorIndex(const ColoredIntervalGraph& g);

  int q() const { return q_; }
  int compactness() const { return c_; }
  const Window& window(ColorId g) const { return windows_[g]; }
  int slot(ColorId g) const { return slots_[g]; }

  // Colors whose window starts / ends at position p.
  std::span<const ColorId> births(Position p) const { return slice(birth_offset_, birth_data_, p); }
  std::span<const ColorId> deaths(Position p) const { return slice(death_offset_, death_data_, p); }

  bool is_live(ColorId g, Position p) const {
    return windows_[g].first_start <= p && p <= windows_[g].last_start;
  }

  // Slot occupancy: occ[s] is the color holding slot s, or kNone.
  std::vector<ColorId> empty_occupancy() const { return std::vector<ColorId>(q_, kNone); }
  // occ at p+1 -> occ at p
  void step_back(std::vector<ColorId>& occ, Position p) const;
  // occ at p -> occ at p+1
  void step_forward(std::vector<ColorId>& occ, Position p) const;

 private:
  static std::span<const ColorId> slice(const std::vector<std::size_t>& off,
                                        const std::vector<ColorId>& data, Position p) {
    return {data.data() + off[p], data.data() + off[p + 1]};
  }

  int q_ = 0;
  int c_ = 0;
  std::vector<Window> windows_;
  std::vector<int> slots_;
  std::vector<std::size_t> birth_offset_, death_offset_;
  std::vector<ColorId> birth_data_, death_data_;
};

struct GraphStats {
  std::size_t gamma = 0;  // colors
  int q = 0;              // max live colors
  std::size_t Gamma = 0;  // max colors in a maximal clique
  std::size_t omega = 0;  // max clique size
  Position ell = 0;       // max interval length (0 when empty)
  std::size_t n = 0;
  int c = 0;
};

GraphStats stats(const ColoredIntervalGraph& g);

}  // namespace jis
