#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace jis {

using VertexId = std::uint32_t;
using Position = std::int64_t;

// Closed interval [start, end].
struct Interval {
  Position start = 1;
  Position end = 1;

  friend bool operator==(const Interval&, const Interval&) = default;

  Position length() const { return end - start; }
  bool intersects(const Interval& o) const { return start <= o.end && o.start <= end; }
  bool strictly_contains(const Interval& o) const {
    return start <= o.start && o.end <= end && !(*this == o);
  }
};

// Vertex i is intervals[i].
using IntervalSet = std::vector<Interval>;

struct CompactifyResult;
CompactifyResult compactify(std::span<const Interval> s);

// A c-compact interval representation with minimum c.
//
// Intervals stay indexed by vertex id; order() lists the vertex ids sorted by
// (start, end, id), which is the sweep order every solver relies on.
// Every position in [1, c] carries at least one start and one end.
class CompactRep {
 public:
  CompactRep() = default;

  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  int compactness() const { return c_; }

  const Interval& operator[](VertexId v) const { return intervals_[v]; }
  std::span<const Interval> intervals() const { return intervals_; }
  std::span<const VertexId> order() const { return order_; }

 private:
  friend CompactifyResult compactify(std::span<const Interval> s);

  std::vector<Interval> intervals_;
  std::vector<VertexId> order_;
  int c_ = 0;
};

struct CompactifyResult {
  CompactRep rep;
  // position[v] = index of vertex v within rep.order()
  std::vector<std::size_t> position;
};

// Sweep-based minimum compactification. Start events precede end events at
// equal coordinates so touching closed intervals keep intersecting.
// Throws InputError if some interval has start > end.
CompactifyResult compactify(std::span<const Interval> s);

// Maximal cliques of the interval graph in sweep order, each a sorted list of
// vertex ids. Enumerates the clique at every distinct end point and drops the
// non-maximal ones, O(n^2); meant as an oracle for compactify.
std::vector<std::vector<VertexId>> maximal_cliques(std::span<const Interval> s);

// No interval strictly contains another in this representation.
bool is_proper_rep(const CompactRep& r);

// The graph itself is proper (claw-free). Compactification can turn a proper
// representation into one with containments such as [1,2] over [2,2]; on a
// compact representation a claw exists exactly when some interval lies
// strictly inside another on both sides.
bool is_proper_graph(const CompactRep& r);

// Every connected component is a clique.
bool is_cluster(const CompactRep& r);

// Connected components (each a clique when is_cluster holds), in sweep order.
std::vector<std::vector<VertexId>> components(const CompactRep& r);

// Maximum end - start. Throws InputError on an empty representation.
Position max_length(const CompactRep& r);
Position max_length(std::span<const Interval> s);

// Maximum number of intervals sharing a point.
std::size_t max_clique_size(const CompactRep& r);

}  // namespace jis
