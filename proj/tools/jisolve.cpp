#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "jisolve/bench.hpp"
#include "jisolve/branch.hpp"
#include "jisolve/color_coding.hpp"
#include "jisolve/dp.hpp"
#include "jisolve/error.hpp"
#include "jisolve/generator.hpp"
#include "jisolve/io.hpp"
#include "jisolve/oracle.hpp"
#include "jisolve/reductions.hpp"

namespace {

using namespace jis;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

Instance load(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  return read_instance_file(path);
}

void print_pick(std::ostream& out, const std::vector<VertexId>& vs) {
  out << "pick";
  for (VertexId v : vs) out << ' ' << v;
  out << '\n';
}

// ---- solve ----

struct SolveArgs {
  std::string input;
  std::string algo = "dpq";
  std::optional<std::int64_t> k;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  bool witness = false;
  bool weighted = false;
  bool exhaustive = false;
};

struct Outcome {
  std::optional<Weight> value;
  std::optional<bool> yes;
  std::optional<std::vector<VertexId>> pick;
};

Outcome solve_cisl(const ColoredIntervalGraph& g, const SolveArgs& a) {
  Outcome o;
  DpOptions dopt;
  dopt.unit_weights = !a.weighted;
  const bool decision_only = a.algo == "branch" || a.algo == "cc";
  if (decision_only && !a.k) throw InputError("--algo " + a.algo + " needs --k");
  if (decision_only && a.weighted) {
    throw PreconditionError(a.algo + " solver is unweighted");
  }

  if (a.algo == "dpq") {
    DpResult r = solve_dp_q(g, a.witness ? DpMode::kWitness : DpMode::kValue, dopt);
    o.value = r.value;
    if (r.witness) o.pick = r.witness->vertices;
  } else if (a.algo == "dpgamma") {
    if (a.witness) throw InputError("dpgamma computes values only; use dpq for witnesses");
    o.value = solve_dp_gamma(g, dopt);
  } else if (a.algo == "brute") {
    Solution s = brute_max_cis(g, !a.weighted);
    o.value = s.value;
    o.pick = s.vertices;
  } else if (a.algo == "branch") {
    BranchOptions bopt;
    bopt.allow_lists = true;
    if (!g.has_singleton_colors()) {
      std::cerr << "note: list colors, using include/exclude branching\n";
    }
    BranchResult r = solve_branch(g.with_unit_weights(), *a.k, bopt);
    o.yes = r.solution.has_value();
    if (r.solution) o.pick = r.solution->vertices;
  } else if (a.algo == "cc") {
    CcConfig cfg;
    cfg.k = *a.k;
    cfg.epsilon = a.epsilon;
    cfg.seed = a.seed;
    cfg.exhaustive_recolorings = a.exhaustive;
    CcResult r = solve_cc(g.with_unit_weights(), cfg);
    o.yes = r.solution.has_value();
    if (r.solution) o.pick = r.solution->vertices;
  } else if (a.algo == "matching") {
    throw PreconditionError("matching needs a 2union instance of two cluster graphs");
  } else {
    throw InputError("unknown algorithm '" + a.algo + "'");
  }
  return o;
}

Outcome solve_two_union(const TwoUnionInstance& t, SolveArgs a) {
  if (!a.k) a.k = t.k;
  if (a.algo == "matching") {
    if (a.weighted && !t.has_unit_weights()) {
      throw PreconditionError("cluster-cluster solver is unweighted");
    }
    TwoUnionInstance unit = t;
    unit.weights.assign(t.size(), 1);
    Solution s = solve_cluster_cluster(unit);
    Outcome o;
    o.value = s.value;
    o.pick = s.vertices;
    return o;
  }
  if (a.algo == "brute") {
    Solution s = brute_two_union(t, !a.weighted);
    Outcome o;
    o.value = s.value;
    o.pick = s.vertices;
    return o;
  }
  // Vertex ids carry over unchanged through the translation.
  return solve_cisl(two_union_to_cisl(t), a);
}

int cmd_solve(const SolveArgs& a) {
  const Instance inst = load(a.input);
  Outcome o;
  if (const auto* g = std::get_if<ColoredIntervalGraph>(&inst)) {
    o = solve_cisl(*g, a);
  } else {
    o = solve_two_union(std::get<TwoUnionInstance>(inst), a);
  }

  std::optional<std::int64_t> k = a.k;
  if (!k) {
    if (const auto* t = std::get_if<TwoUnionInstance>(&inst); t && t->k > 0) k = t->k;
  }
  if (o.value) {
    std::cout << "value " << *o.value << '\n';
    if (k && !o.yes) o.yes = *o.value >= *k;
  }
  if (o.yes) std::cout << (*o.yes ? "yes" : "no") << '\n';
  if (a.witness && o.pick && o.yes.value_or(true)) print_pick(std::cout, *o.pick);
  return o.yes.value_or(true) ? kExitYes : kExitNo;
}

// ---- kernelize ----

struct KernelArgs {
  std::string input;
  std::string rules;
  std::optional<std::int64_t> k;
};

void print_kept(std::ostream& out, const std::vector<VertexId>& kept) {
  out << "# kept";
  for (VertexId v : kept) out << ' ' << v;
  out << '\n';
}

int cmd_kernelize(const KernelArgs& a) {
  const Instance inst = load(a.input);

  if (a.rules == "signature") {
    const auto* t = std::get_if<TwoUnionInstance>(&inst);
    if (!t) throw PreconditionError("signature rule needs a 2union instance");
    const SignatureReduction r = signature_reduce(*t);
    const auto c = static_cast<std::uint64_t>(c_forall(*t));
    std::uint64_t bound = c * c * c;
    std::string which = "c^3";
    if (!t->has_unit_weights()) {
      bound = c * c * c * c;
      which = "c^4";
    } else if (is_proper_rep(t->rep1) || is_proper_rep(t->rep2)) {
      bound = 2 * c * c;
      which = "2c^2";
    }
    std::cerr << "stats n_in=" << t->size() << " n_out=" << r.instance.size() << " c_forall=" << c
              << " bound=" << bound << " (" << which << ") k=" << t->k << " k_out=" << t->k << '\n';
    if (r.instance.size() > bound) {
      std::cerr << "error: kernel bound violated\n";
      return kExitNo;
    }
    print_kept(std::cout, r.kept);
    write_two_union(std::cout, r.instance);
    return kExitYes;
  }

  const auto* g = std::get_if<ColoredIntervalGraph>(&inst);
  if (!g) throw PreconditionError(a.rules + " needs a cisl instance");
  if (!a.k) throw InputError("--rules " + a.rules + " needs --k");

  if (a.rules == "colorpack") {
    const ColorPackResult r = color_pack_reduce(*g, *a.k);
    std::cerr << "stats n_in=" << g->size() << " n_out=" << r.graph.size() << " k=" << *a.k
              << " k_out=" << r.k << " removed_colors=" << r.steps.size() << '\n';
    std::cout << "# k " << r.k << '\n';
    print_kept(std::cout, r.kept);
    write_cisl(std::cout, r.graph);
    return kExitYes;
  }
  if (a.rules == "proper-kernel") {
    const KernelOutcome r = kernelize_proper(*g, *a.k);
    if (r.kind == KernelOutcome::Kind::kSolvedYes) {
      std::cerr << "stats n_in=" << g->size() << " k=" << *a.k << " solved by greedy\n";
      std::cout << "solved yes\n";
      print_pick(std::cout, r.certificate.vertices);
      return kExitYes;
    }
    std::cerr << "stats n_in=" << g->size() << " n_out=" << r.graph.size() << " bound=" << r.bound
              << " (4k^2*omega) k=" << *a.k << " k_out=" << r.k << '\n';
    std::cout << "# k " << r.k << '\n';
    print_kept(std::cout, r.kept);
    write_cisl(std::cout, r.graph);
    return kExitYes;
  }
  throw InputError("unknown rule set '" + a.rules + "'");
}

// ---- generate / reduce-sat ----

struct GenerateArgs {
  std::string kind;
  GenParams p;
  std::int64_t k = 0;
  bool weighted = false;
};

int cmd_generate(const GenerateArgs& a) {
  if (a.kind == "cisl") {
    write_cisl(std::cout, gen_cisl(a.p));
  } else if (a.kind == "2union") {
    write_two_union(std::cout, gen_two_union(a.p, a.k, a.weighted));
  } else {
    throw InputError("unknown instance kind '" + a.kind + "'");
  }
  return kExitYes;
}

int cmd_reduce_sat(const std::string& path) {
  Cnf3 f;
  if (path == "-") {
    f = parse_dimacs(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    f = parse_dimacs(in);
  }
  write_two_union(std::cout, reduce_sat3(f));
  return kExitYes;
}

// ---- bench ----

struct BenchArgs {
  std::string sweep = "gamma";
  std::string algo = "dpq";
  std::vector<std::int64_t> values;
  std::int64_t from = 0, to = -1, step = 1;
  GenParams p;
  int repeats = 1;
};

int cmd_bench(BenchArgs a) {
  std::vector<std::int64_t> points = a.values;
  if (points.empty()) {
    if (a.step < 1) throw InputError("--step must be positive");
    for (std::int64_t x = a.from; x <= a.to; x += a.step) points.push_back(x);
  }
  if (points.empty()) throw InputError("empty sweep; give --values or --from/--to");
  if (a.repeats < 1) throw InputError("--repeats must be positive");

  write_bench_header(std::cout);
  for (std::int64_t x : points) {
    GenParams p = a.p;
    if (a.sweep == "gamma") {
      p.gamma = static_cast<int>(x);
    } else if (a.sweep == "n") {
      p.n = static_cast<std::size_t>(x);
    } else if (a.sweep == "c") {
      p.c = static_cast<int>(x);
    } else {
      throw InputError("unknown sweep '" + a.sweep + "'");
    }
    for (int rep = 0; rep < a.repeats; ++rep) {
      GenParams pr = p;
      pr.seed = a.p.seed + static_cast<std::uint64_t>(rep);
      write_bench_row(std::cout, run_bench_point(a.algo, pr));
      std::cout.flush();
    }
  }
  return kExitYes;
}

// ---- verify ----

int cmd_verify(const std::string& instance_path, const std::string& solution_path, bool weighted) {
  const Instance inst = load(instance_path);
  std::ifstream in(solution_path);
  if (!in) throw InputError("cannot open " + solution_path);
  const SolutionFile sol = parse_solution(in);

  std::optional<std::string> bad;
  Weight total = 0;
  if (const auto* g = std::get_if<ColoredIntervalGraph>(&inst)) {
    bad = find_violation(*g, sol.picks);
    if (!bad) {
      for (VertexId v : sol.picks) total += weighted ? g->weight(v) : 1;
    }
  } else {
    const auto& t = std::get<TwoUnionInstance>(inst);
    bad = find_violation(t, sol.picks);
    if (!bad) {
      for (VertexId v : sol.picks) total += weighted ? t.weights[v] : 1;
    }
  }
  if (!bad && sol.value && *sol.value != total) {
    bad = "claimed value " + std::to_string(*sol.value) + " but the set is worth " +
          std::to_string(total);
  }
  if (bad) {
    std::cout << "invalid: " << *bad << '\n';
    return kExitNo;
  }
  std::cout << "valid value " << total << '\n';
  return kExitYes;
}

void add_gen_flags(CLI::App* cmd, GenParams& p) {
  cmd->add_option("--n", p.n, "interval count");
  cmd->add_option("--c", p.c, "endpoint range [1, c]");
  cmd->add_option("--gamma", p.gamma, "number of colors");
  cmd->add_option("--color-prob", p.color_prob, "probability of each color in a list");
  cmd->add_option("--weight-max", p.weight_max, "weights drawn from [1, weight-max]");
  cmd->add_option("--seed", p.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colorful independent sets in colored interval graphs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("instance", solve.input, "instance file, - for stdin")->required();
  solve_cmd->add_option("--algo", solve.algo, "dpq|dpgamma|branch|cc|matching|brute")
      ->check(CLI::IsMember({"dpq", "dpgamma", "branch", "cc", "matching", "brute"}));
  solve_cmd->add_option("--k", solve.k, "decision target");
  solve_cmd->add_option("--epsilon", solve.epsilon, "color coding error probability");
  solve_cmd->add_option("--seed", solve.seed, "color coding seed");
  solve_cmd->add_flag("--witness", solve.witness, "print the chosen vertices");
  solve_cmd->add_flag("--weighted", solve.weighted, "maximize weight instead of cardinality");
  solve_cmd->add_flag("--exhaustive-recolorings", solve.exhaustive,
                      "color coding tries every recoloring (gamma <= 12)");

  KernelArgs kern;
  auto* kern_cmd = app.add_subcommand("kernelize", "apply data reduction rules");
  kern_cmd->add_option("instance", kern.input)->required();
  kern_cmd->add_option("--rules", kern.rules, "signature|colorpack|proper-kernel")
      ->required()
      ->check(CLI::IsMember({"signature", "colorpack", "proper-kernel"}));
  kern_cmd->add_option("--k", kern.k);

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "random instance");
  gen_cmd->add_option("kind", gen.kind, "cisl|2union")->required()->check(CLI::IsMember({"cisl", "2union"}));
  add_gen_flags(gen_cmd, gen.p);
  gen_cmd->add_option("--k", gen.k, "k written into a 2union header");
  gen_cmd->add_flag("--weighted", gen.weighted, "random weights for 2union");

  std::string cnf_path;
  auto* sat_cmd = app.add_subcommand("reduce-sat", "3-SAT (DIMACS) to 2union");
  sat_cmd->add_option("cnf", cnf_path, "DIMACS file, - for stdin")->required();

  BenchArgs bench;
  bench.p.n = 100000;
  bench.p.c = 1000;
  bench.p.gamma = 10;
  auto* bench_cmd = app.add_subcommand("bench", "timing sweep, CSV on stdout");
  bench_cmd->add_option("--sweep", bench.sweep, "gamma|n|c")->check(CLI::IsMember({"gamma", "n", "c"}));
  bench_cmd->add_option("--algo", bench.algo, "dpq|dpgamma")->check(CLI::IsMember({"dpq", "dpgamma"}));
  bench_cmd->add_option("--values", bench.values, "explicit sweep values")->delimiter(',');
  bench_cmd->add_option("--from", bench.from);
  bench_cmd->add_option("--to", bench.to);
  bench_cmd->add_option("--step", bench.step);
  bench_cmd->add_option("--repeats", bench.repeats);
  add_gen_flags(bench_cmd, bench.p);

  std::string verify_instance, verify_solution;
  bool verify_weighted = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a solution file");
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("solution", verify_solution)->required();
  verify_cmd->add_flag("--weighted", verify_weighted, "the claimed value is a weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*kern_cmd) return cmd_kernelize(kern);
    if (*gen_cmd) return cmd_generate(gen);
    if (*sat_cmd) return cmd_reduce_sat(cnf_path);
    if (*bench_cmd) return cmd_bench(bench);
    if (*verify_cmd) return cmd_verify(verify_instance, verify_solution, verify_weighted);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNo;
  }
  return kExitUsage;
}
