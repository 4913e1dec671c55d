#include "jisolve/generator.hpp"

#include <cstdlib>
#include <random>
#include <utility>

#include "jisolve/error.hpp"

namespace jis {

void GenParams::validate() const {
  if (c < 1) throw InputError("c must be at least 1");
  if (gamma < 1) throw InputError("gamma must be at least 1");
  if (!(color_prob > 0.0 && color_prob <= 1.0)) throw InputError("color_prob must lie in (0, 1]");
  if (weight_max < 1) throw InputError("weight_max must be at least 1");
}

namespace {

std::mt19937_64 make_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

Interval draw_interval(std::mt19937_64& rng, int c) {
  std::uniform_int_distribution<Position> pos(1, c);
  Position s = pos(rng);
  Position e = pos(rng);
  if (s > e) std::swap(s, e);
  return {s, e};
}

}  // namespace

ColoredIntervalGraph gen_cisl(const GenParams& p) {
  p.validate();
  auto rng = make_rng(p.seed);
  std::bernoulli_distribution keep(p.color_prob);
  std::uniform_int_distribution<Weight> wdist(1, p.weight_max);

  IntervalSet ivs(p.n);
  std::vector<std::vector<ColorId>> cols(p.n);
  std::vector<Weight> ws(p.n);
  for (std::size_t v = 0; v < p.n; ++v) {
    ivs[v] = draw_interval(rng, p.c);
    while (cols[v].empty()) {
      for (int col = 1; col <= p.gamma; ++col) {
        if (keep(rng)) cols[v].push_back(static_cast<ColorId>(col));
      }
    }
    ws[v] = wdist(rng);
  }
  return ColoredIntervalGraph::build(ivs, cols, std::move(ws));
}

TwoUnionInstance gen_two_union(const GenParams& p, std::int64_t k, bool weighted) {
  p.validate();
  auto rng = make_rng(p.seed);
  IntervalSet g1(p.n), g2(p.n);
  for (auto& iv : g1) iv = draw_interval(rng, p.c);
  for (auto& iv : g2) iv = draw_interval(rng, p.c);
  std::vector<Weight> ws(p.n, 1);
  if (weighted) {
    std::uniform_int_distribution<Weight> wdist(1, p.weight_max);
    for (auto& w : ws) w = wdist(rng);
  }
  return TwoUnionInstance::build(g1, g2, k, std::move(ws));
}

TwoUnionInstance reduce_sat3(const Cnf3& f) {
  f.validate();
  const auto nv = static_cast<std::size_t>(f.num_vars);

  // occurrences[x] = (clause vertex, positive?) in clause order
  std::vector<std::vector<std::pair<VertexId, bool>>> occurrences(nv + 1);
  VertexId next = 0;
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      occurrences[static_cast<std::size_t>(std::abs(lit))].emplace_back(next++, lit > 0);
    }
  }
  std::vector<VertexId> var_base(nv + 1, 0);
  for (std::size_t x = 1; x <= nv; ++x) {
    var_base[x] = next;
    next += static_cast<VertexId>(2 * occurrences[x].size());
  }

  IntervalSet g1(next), g2(next);
  Position p = 1;  // first graph cursor
  Position q = 1;  // second graph cursor

  // Clause cliques.
  VertexId v = 0;
  for (const auto& clause : f.clauses) {
    for (std::size_t i = 0; i < clause.size(); ++i) g2[v++] = {q, q};
    ++q;
  }

  std::int64_t k = static_cast<std::int64_t>(f.clauses.size());
  for (std::size_t x = 1; x <= nv; ++x) {
    const auto m = static_cast<VertexId>(occurrences[x].size());
    k += m;
    // T_r = base + 2r, F_r = base + 2r + 1.
    for (VertexId r = 0; r < m; ++r) {
      const VertexId t = var_base[x] + 2 * r;
      const VertexId fv = t + 1;
      const auto [clause_vertex, positive] = occurrences[x][r];
      const VertexId leaf = positive ? fv : t;
      const VertexId partner = positive ? t : fv;
      // Path clause_vertex - leaf - partner.
      g1[clause_vertex] = {p, p + 1};
      g1[leaf] = {p + 1, p + 2};
      g1[partner] = {p + 2, p + 3};
      p += 4;
      // Edge F_r - T_{r+1}.
      g2[fv] = {q, q};
      g2[var_base[x] + 2 * ((r + 1) % m)] = {q, q};
      ++q;
    }
  }
  return TwoUnionInstance::build(g1, g2, k);
}

}  // namespace jis
