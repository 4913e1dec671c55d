#include "jisolve/color_coding.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "jisolve/dp.hpp"
#include "jisolve/error.hpp"

namespace jis {

void CcConfig::validate() const {
  if (k < 1) throw InputError("color coding needs k >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
}

std::uint64_t trials_needed(std::int64_t k, double epsilon) {
  const double kd = static_cast<double>(k);
  const double ratio = std::exp(kd * std::log(kd) - std::lgamma(kd + 1.0));
  const double t = std::ceil(std::abs(std::log(epsilon)) * ratio);
  return t < 1.0 ? 1 : static_cast<std::uint64_t>(t);
}

ColoredIntervalGraph recolor(const ColoredIntervalGraph& g, const std::vector<ColorId>& delta) {
  if (!g.has_singleton_colors()) {
    throw PreconditionError("recoloring needs single-colored vertices (JISP)");
  }
  if (delta.size() != g.num_colors()) throw InputError("recoloring size differs from gamma");
  std::vector<std::vector<ColorId>> cols(g.size());
  for (VertexId v = 0; v < g.size(); ++v) cols[v] = {delta[g.colors(v)[0]]};
  std::vector<Weight> ws(g.weights().begin(), g.weights().end());
  return ColoredIntervalGraph::build(g.rep().intervals(), cols, std::move(ws));
}

std::vector<ColorId> draw_recoloring(std::size_t gamma, std::int64_t k, std::uint64_t seed,
                                     std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<ColorId> pick(0, static_cast<ColorId>(k - 1));
  std::vector<ColorId> delta(gamma);
  for (auto& d : delta) d = pick(rng);
  return delta;
}

namespace {

std::optional<Solution> try_recoloring(const ColoredIntervalGraph& g,
                                       const std::vector<ColorId>& delta, std::int64_t k) {
  const ColoredIntervalGraph recolored = recolor(g, delta);
  DpOptions opts;
  opts.unit_weights = true;
  DpResult r = solve_dp_q(recolored, DpMode::kWitness, opts);
  if (r.value < k) return std::nullopt;
  Solution s = std::move(*r.witness);
  if (auto bad = find_violation(g, s.vertices)) {
    throw std::logic_error("color coding produced an invalid set: " + *bad);
  }
  return s;
}

}  // namespace

CcResult solve_cc(const ColoredIntervalGraph& g, const CcConfig& cfg) {
  cfg.validate();
  if (!g.has_unit_weights()) throw PreconditionError("color coding is unweighted");
  if (!g.has_singleton_colors()) {
    throw PreconditionError("color coding needs single-colored vertices (JISP)");
  }
  CcResult result;
  const std::size_t gamma = g.num_colors();

  if (cfg.exhaustive_recolorings) {
    if (gamma > 12) throw LimitError("exhaustive recolorings limited to gamma <= 12");
    std::vector<ColorId> delta(gamma, 0);
    const auto kc = static_cast<ColorId>(cfg.k);
    while (true) {
      ++result.trials_run;
      if (auto s = try_recoloring(g, delta, cfg.k)) {
        result.solution = std::move(s);
        return result;
      }
      std::size_t i = 0;
      while (i < gamma && ++delta[i] == kc) delta[i++] = 0;
      if (i == gamma) return result;
    }
  }

  const std::uint64_t trials = cfg.max_trials_override.value_or(trials_needed(cfg.k, cfg.epsilon));
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++result.trials_run;
    if (auto s = try_recoloring(g, draw_recoloring(gamma, cfg.k, cfg.seed, t), cfg.k)) {
      result.solution = std::move(s);
      return result;
    }
  }
  return result;
}

}  // namespace jis
