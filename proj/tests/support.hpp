#pragma once

// Random instance helpers shared by the unit tests and the acceptance run.

#include <algorithm>
#include <random>
#include <vector>

#include "jisolve/colored_graph.hpp"
#include "jisolve/oracle.hpp"

namespace jis::fixtures {

using Rng = std::mt19937_64;

inline Interval random_interval(Rng& rng, Position c) {
  std::uniform_int_distribution<Position> pos(1, c);
  Position a = pos(rng), b = pos(rng);
  if (a > b) std::swap(a, b);
  return {a, b};
}

inline IntervalSet random_intervals(Rng& rng, std::size_t n, Position c) {
  IntervalSet s(n);
  for (auto& iv : s) iv = random_interval(rng, c);
  return s;
}

// Lists drawn with probability 1/2 per color (nonempty), weights 1..max_w.
inline ColoredIntervalGraph random_cisl(Rng& rng, std::size_t n, int gamma, Position c,
                                        Weight max_w = 1) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<Weight> wd(1, max_w);
  IntervalSet ivs = random_intervals(rng, n, c);
  std::vector<std::vector<ColorId>> cols(n);
  std::vector<Weight> ws(n);
  for (std::size_t v = 0; v < n; ++v) {
    while (cols[v].empty()) {
      for (int col = 0; col < gamma; ++col) {
        if (coin(rng)) cols[v].push_back(static_cast<ColorId>(col));
      }
    }
    ws[v] = wd(rng);
  }
  return ColoredIntervalGraph::build(ivs, cols, std::move(ws));
}

inline ColoredIntervalGraph random_jisp(Rng& rng, std::size_t n, int gamma, Position c) {
  std::uniform_int_distribution<ColorId> cd(0, static_cast<ColorId>(gamma - 1));
  IntervalSet ivs = random_intervals(rng, n, c);
  std::vector<std::vector<ColorId>> cols(n);
  for (auto& l : cols) l = {cd(rng)};
  return ColoredIntervalGraph::build(ivs, cols);
}

// Equal-length intervals: a unit interval graph, hence proper.
inline ColoredIntervalGraph random_proper_jisp(Rng& rng, std::size_t n, int gamma, Position c,
                                               Position len) {
  std::uniform_int_distribution<Position> pos(1, c);
  std::uniform_int_distribution<ColorId> cd(0, static_cast<ColorId>(gamma - 1));
  IntervalSet ivs(n);
  std::vector<std::vector<ColorId>> cols(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Position s = pos(rng);
    ivs[v] = {s, s + len};
    cols[v] = {cd(rng)};
  }
  return ColoredIntervalGraph::build(ivs, cols);
}

// Every vertex joins one of `clusters` cliques; all members of cluster j
// contain the point 3j + 2.
inline IntervalSet random_cluster_side(Rng& rng, std::size_t n, int clusters) {
  std::uniform_int_distribution<int> cd(0, clusters - 1);
  std::uniform_int_distribution<int> wiggle(0, 1);
  IntervalSet s(n);
  for (auto& iv : s) {
    const Position mid = 3 * cd(rng) + 2;
    iv = {mid - wiggle(rng), mid + wiggle(rng)};
  }
  return s;
}

inline TwoUnionInstance random_two_union(Rng& rng, std::size_t n, Position c,
                                         Weight max_w = 1) {
  std::uniform_int_distribution<Weight> wd(1, max_w);
  IntervalSet a = random_intervals(rng, n, c);
  IntervalSet b = random_intervals(rng, n, c);
  std::vector<Weight> ws(n);
  for (auto& w : ws) w = wd(rng);
  return TwoUnionInstance::build(a, b, 0, std::move(ws));
}

// Some 2-union instances where one side is proper (equal lengths).
inline TwoUnionInstance random_two_union_one_proper(Rng& rng, std::size_t n, Position c,
                                                    Position len) {
  std::uniform_int_distribution<Position> pos(1, c);
  IntervalSet a(n);
  for (auto& iv : a) {
    const Position s = pos(rng);
    iv = {s, s + len};
  }
  IntervalSet b = random_intervals(rng, n, c);
  return TwoUnionInstance::build(a, b, 0);
}

inline Cnf3 random_cnf(Rng& rng, int vars, int clauses) {
  Cnf3 f;
  f.num_vars = vars;
  std::uniform_int_distribution<int> width(1, std::min(3, vars));
  std::bernoulli_distribution neg(0.5);
  for (int j = 0; j < clauses; ++j) {
    std::vector<int> pool(static_cast<std::size_t>(vars));
    for (int x = 0; x < vars; ++x) pool[static_cast<std::size_t>(x)] = x + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> clause;
    const int w = width(rng);
    for (int i = 0; i < w; ++i) clause.push_back(neg(rng) ? -pool[static_cast<std::size_t>(i)] : pool[static_cast<std::size_t>(i)]);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

// Every clause over at most three of the variables 1..max_vars, each variable
// at most once, with any polarity.
inline std::vector<std::vector<int>> all_clauses(int max_vars) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << max_vars); ++mask) {
    std::vector<int> vars;
    for (int x = 0; x < max_vars; ++x) {
      if (mask >> x & 1) vars.push_back(x + 1);
    }
    if (vars.size() > 3) continue;
    for (int signs = 0; signs < (1 << vars.size()); ++signs) {
      std::vector<int> clause;
      for (std::size_t i = 0; i < vars.size(); ++i) clause.push_back(signs >> i & 1 ? -vars[i] : vars[i]);
      out.push_back(std::move(clause));
    }
  }
  return out;
}

}  // namespace jis::fixtures
