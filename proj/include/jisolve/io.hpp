#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "jisolve/colored_graph.hpp"
#include "jisolve/oracle.hpp"
#include "jisolve/solution.hpp"

namespace jis {

// Text instance formats ('#' starts a comment, blank lines are skipped):
//
//   cisl <n> <gamma>
//   v <start> <end> <weight> <color>,<color>,...     (n lines, colors 1..gamma)
//
//   2union <n> <k>
//   g1 <start> <end> [weight]                         (n lines)
//   g2 <start> <end>                                  (n lines)
//
// Parse errors are InputError with a "line N: " prefix.
using Instance = std::variant<ColoredIntervalGraph, TwoUnionInstance>;

Instance parse_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

// Normalized output: compact coordinates, colors renumbered to 1..gamma.
void write_cisl(std::ostream& out, const ColoredIntervalGraph& g);
void write_two_union(std::ostream& out, const TwoUnionInstance& t);
void write_instance(std::ostream& out, const Instance& inst);

// Solution files: `value <v>` (optional) and `pick <id> ...`. Lines `yes` and
// `no` are accepted and ignored so solver output can be fed back directly.
struct SolutionFile {
  std::vector<VertexId> picks;
  std::optional<Weight> value;
};
SolutionFile parse_solution(std::istream& in);

// DIMACS CNF: `p cnf <vars> <clauses>` followed by zero-terminated clauses.
Cnf3 parse_dimacs(std::istream& in);

}  // namespace jis
