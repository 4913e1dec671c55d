#include "jisolve/interval.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "jisolve/error.hpp"

namespace jis {

namespace {

struct Event {
  Position coord;
  int kind;  // 0 = start, 1 = end
  VertexId v;

  auto key() const { return std::tie(coord, kind, v); }
  bool operator<(const Event& o) const { return key() < o.key(); }
};

}  // namespace

CompactifyResult compactify(std::span<const Interval> s) {
  const std::size_t n = s.size();
  std::vector<Event> events;
  events.reserve(2 * n);
  for (VertexId v = 0; v < n; ++v) {
    if (s[v].start > s[v].end) {
      throw InputError("interval " + std::to_string(v) + " has start > end");
    }
    events.push_back({s[v].start, 0, v});
    events.push_back({s[v].end, 1, v});
  }
  std::sort(events.begin(), events.end());

  CompactifyResult out;
  CompactRep& rep = out.rep;
  rep.intervals_.resize(n);
  Position pos = 0;
  bool last_was_end = true;
  for (const Event& e : events) {
    if (e.kind == 0) {
      if (last_was_end) {
        ++pos;
        last_was_end = false;
      }
      rep.intervals_[e.v].start = pos;
    } else {
      rep.intervals_[e.v].end = pos;
      last_was_end = true;
    }
  }
  rep.c_ = static_cast<int>(pos);

  rep.order_.resize(n);
  std::iota(rep.order_.begin(), rep.order_.end(), VertexId{0});
  const auto& iv = rep.intervals_;
  std::sort(rep.order_.begin(), rep.order_.end(), [&](VertexId a, VertexId b) {
    return std::tie(iv[a].start, iv[a].end, a) < std::tie(iv[b].start, iv[b].end, b);
  });
  out.position.resize(n);
  for (std::size_t p = 0; p < n; ++p) out.position[rep.order_[p]] = p;
  return out;
}

std::vector<std::vector<VertexId>> maximal_cliques(std::span<const Interval> s) {
  std::vector<Position> ends;
  ends.reserve(s.size());
  for (const Interval& iv : s) ends.push_back(iv.end);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  std::vector<std::vector<VertexId>> candidates;
  for (Position e : ends) {
    std::vector<VertexId> clique;
    for (VertexId v = 0; v < s.size(); ++v) {
      if (s[v].start <= e && e <= s[v].end) clique.push_back(v);
    }
    candidates.push_back(std::move(clique));
  }

  std::vector<std::vector<VertexId>> result;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j) continue;
      const auto& a = candidates[i];
      const auto& b = candidates[j];
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        // equal sets: keep the first occurrence only
        if (a.size() < b.size() || j < i) maximal = false;
      }
    }
    if (maximal) result.push_back(candidates[i]);
  }
  return result;
}

bool is_proper_rep(const CompactRep& r) {
  std::vector<VertexId> ids(r.size());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
    if (r[a].start != r[b].start) return r[a].start < r[b].start;
    return r[a].end > r[b].end;
  });
  // Any earlier distinct interval reaching at least as far contains the current one.
  Position max_end = 0;
  bool have = false;
  for (std::size_t i = 0; i < ids.size();) {
    const Interval cur = r[ids[i]];
    if (have && max_end >= cur.end) return false;
    std::size_t j = i;
    while (j < ids.size() && r[ids[j]] == cur) ++j;
    max_end = have ? std::max(max_end, cur.end) : cur.end;
    have = true;
    i = j;
  }
  return true;
}

bool is_proper_graph(const CompactRep& r) {
  std::span<const VertexId> ord = r.order();
  Position max_end = 0;  // over intervals with a smaller start
  for (std::size_t i = 0; i < ord.size();) {
    std::size_t j = i;
    Position group_end = 0;
    for (; j < ord.size() && r[ord[j]].start == r[ord[i]].start; ++j) {
      if (r[ord[j]].end < max_end) return false;
      group_end = std::max(group_end, r[ord[j]].end);
    }
    max_end = std::max(max_end, group_end);
    i = j;
  }
  return true;
}

std::vector<std::vector<VertexId>> components(const CompactRep& r) {
  std::vector<std::vector<VertexId>> out;
  Position reach = 0;
  for (VertexId v : r.order()) {
    if (out.empty() || r[v].start > reach) {
      out.emplace_back();
      reach = r[v].end;
    }
    out.back().push_back(v);
    reach = std::max(reach, r[v].end);
  }
  return out;
}

bool is_cluster(const CompactRep& r) {
  for (const auto& comp : components(r)) {
    Position max_start = r[comp.front()].start;
    Position min_end = r[comp.front()].end;
    for (VertexId v : comp) {
      max_start = std::max(max_start, r[v].start);
      min_end = std::min(min_end, r[v].end);
    }
    if (max_start > min_end) return false;
  }
  return true;
}

Position max_length(std::span<const Interval> s) {
  if (s.empty()) throw InputError("empty representation");
  Position best = 0;
  for (const Interval& iv : s) best = std::max(best, iv.length());
  return best;
}

Position max_length(const CompactRep& r) { return max_length(r.intervals()); }

std::size_t max_clique_size(const CompactRep& r) {
  if (r.empty()) return 0;
  std::vector<std::int64_t> diff(static_cast<std::size_t>(r.compactness()) + 2, 0);
  for (const Interval& iv : r.intervals()) {
    ++diff[iv.start];
    --diff[iv.end + 1];
  }
  std::int64_t cur = 0, best = 0;
  for (std::size_t p = 1; p < diff.size(); ++p) {
    cur += diff[p];
    best = std::max(best, cur);
  }
  return static_cast<std::size_t>(best);
}

}  // namespace jis
