#include "jisolve/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "jisolve/error.hpp"

namespace jis {

namespace {

bool overlap(Position a_lo, Position a_hi, Position b_lo, Position b_hi) {
  return !(a_hi < b_lo || b_hi < a_lo);
}

bool share_color(std::span<const ColorId> a, std::span<const ColorId> b) {
  for (ColorId x : a) {
    for (ColorId y : b) {
      if (x == y) return true;
    }
  }
  return false;
}

struct Enumerator {
  std::size_t n;
  std::vector<std::uint32_t> conflict;
  std::vector<Weight> weight;
  std::vector<Weight> suffix;  // suffix[i] = sum of weight[i..]

  Weight best = -1;
  std::uint32_t best_set = 0;

  void run() {
    suffix.assign(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + weight[i];
    dfs(0, 0, 0, 0);
  }

  void dfs(std::size_t i, std::uint32_t chosen, std::uint32_t blocked, Weight value) {
    if (best >= 0 && value + suffix[i] <= best) return;
    if (i == n) {
      best = value;
      best_set = chosen;
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (!(blocked & bit)) dfs(i + 1, chosen | bit, blocked | conflict[i], value + weight[i]);
    dfs(i + 1, chosen, blocked, value);
  }

  Solution solution() const {
    Solution s;
    s.value = std::max<Weight>(best, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (best_set >> i & 1) s.vertices.push_back(static_cast<VertexId>(i));
    }
    return s;
  }
};

void check_limit(std::size_t n) {
  if (n > kBruteLimit) {
    throw LimitError("brute force limited to " + std::to_string(kBruteLimit) + " vertices");
  }
}

}  // namespace

Solution brute_max_cis(const ColoredIntervalGraph& g, bool unit_weights) {
  check_limit(g.size());
  Enumerator e;
  e.n = g.size();
  e.conflict.assign(e.n, 0);
  for (std::size_t i = 0; i < e.n; ++i) {
    e.weight.push_back(unit_weights ? 1 : g.weight(static_cast<VertexId>(i)));
    const Interval& a = g.rep().intervals()[i];
    for (std::size_t j = 0; j < e.n; ++j) {
      if (i == j) continue;
      const Interval& b = g.rep().intervals()[j];
      if (overlap(a.start, a.end, b.start, b.end) ||
          share_color(g.colors(static_cast<VertexId>(i)), g.colors(static_cast<VertexId>(j)))) {
        e.conflict[i] |= std::uint32_t{1} << j;
      }
    }
  }
  e.run();
  return e.solution();
}

Solution brute_two_union(const TwoUnionInstance& t, bool unit_weights) {
  check_limit(t.size());
  if (t.rep2.size() != t.rep1.size()) throw InputError("2-union sides differ in size");
  Enumerator e;
  e.n = t.size();
  e.conflict.assign(e.n, 0);
  for (std::size_t i = 0; i < e.n; ++i) {
    e.weight.push_back(unit_weights || t.weights.empty() ? 1 : t.weights[i]);
    for (std::size_t j = 0; j < e.n; ++j) {
      if (i == j) continue;
      const Interval& a1 = t.rep1.intervals()[i];
      const Interval& b1 = t.rep1.intervals()[j];
      const Interval& a2 = t.rep2.intervals()[i];
      const Interval& b2 = t.rep2.intervals()[j];
      if (overlap(a1.start, a1.end, b1.start, b1.end) ||
          overlap(a2.start, a2.end, b2.start, b2.end)) {
        e.conflict[i] |= std::uint32_t{1} << j;
      }
    }
  }
  e.run();
  return e.solution();
}

std::vector<std::size_t> brute_pareto(const std::vector<Point4>& points) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool survives = true;
    for (std::size_t j = 0; j < points.size() && survives; ++j) {
      if (i == j) continue;
      bool geq = true;
      for (int d = 0; d < 4; ++d) geq = geq && points[j][d] >= points[i][d];
      if (!geq) continue;
      if (points[j] != points[i] || j < i) survives = false;
    }
    if (survives) keep.push_back(i);
  }
  return keep;
}

void Cnf3::validate() const {
  if (num_vars < 0) throw InputError("negative variable count");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto& cl = clauses[j];
    const std::string where = "clause " + std::to_string(j + 1);
    if (cl.empty() || cl.size() > 3) throw InputError(where + " must have 1 to 3 literals");
    for (std::size_t a = 0; a < cl.size(); ++a) {
      if (cl[a] == 0 || std::abs(cl[a]) > num_vars) throw InputError(where + ": bad literal");
      for (std::size_t b = 0; b < a; ++b) {
        if (std::abs(cl[a]) == std::abs(cl[b])) throw InputError(where + " repeats a variable");
      }
    }
  }
}

bool sat3_satisfiable(const Cnf3& f) {
  f.validate();
  if (f.num_vars > 20) throw LimitError("sat3_satisfiable limited to 20 variables");
  const std::uint32_t total = std::uint32_t{1} << f.num_vars;
  for (std::uint32_t assign = 0; assign < total; ++assign) {
    bool all = true;
    for (const auto& cl : f.clauses) {
      bool any = false;
      for (int lit : cl) {
        const bool value = assign >> (std::abs(lit) - 1) & 1;
        if ((lit > 0) == value) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace jis
