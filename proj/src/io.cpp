#include "jisolve/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "jisolve/error.hpp"

namespace jis {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line split into tokens, comments stripped.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line_no_) + ": " + msg);
  }

  template <class T>
  T number(const std::string& tok, const char* what) const {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(std::string("bad ") + what + " '" + tok + "'");
    }
    return value;
  }

  void expect_fields(const std::vector<std::string>& tokens, std::size_t lo, std::size_t hi) const {
    if (tokens.size() < lo || tokens.size() > hi) {
      fail("expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
           " fields, got " + std::to_string(tokens.size()));
    }
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

Interval read_interval(const LineReader& r, const std::string& s, const std::string& e) {
  Interval iv{r.number<Position>(s, "start"), r.number<Position>(e, "end")};
  if (iv.start < 1) r.fail("start must be at least 1");
  if (iv.end < iv.start) r.fail("end before start");
  return iv;
}

ColoredIntervalGraph parse_cisl(LineReader& r, std::size_t n, ColorId gamma) {
  IntervalSet ivs;
  std::vector<std::vector<ColorId>> cols;
  std::vector<Weight> ws;
  std::vector<std::string> tok;
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.next(tok)) r.fail("missing vertex lines: expected " + std::to_string(n));
    if (tok[0] != "v") r.fail("expected a 'v' line");
    r.expect_fields(tok, 5, 5);
    ivs.push_back(read_interval(r, tok[1], tok[2]));
    const auto w = r.number<Weight>(tok[3], "weight");
    if (w < 0) r.fail("negative weight");
    ws.push_back(w);
    std::vector<ColorId> list;
    std::string_view rest = tok[4];
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string item(rest.substr(0, comma));
      const auto c = r.number<ColorId>(item, "color");
      if (c < 1 || c > gamma) r.fail("color " + item + " outside 1.." + std::to_string(gamma));
      list.push_back(c);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) r.fail("trailing comma in color list");
    }
    cols.push_back(std::move(list));
  }
  if (r.next(tok)) r.fail("unexpected extra line");
  return ColoredIntervalGraph::build(ivs, cols, std::move(ws));
}

TwoUnionInstance parse_two_union(LineReader& r, std::size_t n, std::int64_t k) {
  IntervalSet g1, g2;
  std::vector<Weight> ws;
  std::vector<std::string> tok;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const bool first = i < n;
    if (!r.next(tok)) r.fail("missing " + std::string(first ? "g1" : "g2") + " lines");
    if (tok[0] != (first ? "g1" : "g2")) r.fail(std::string("expected a '") + (first ? "g1" : "g2") + "' line");
    r.expect_fields(tok, 3, first ? 4 : 3);
    (first ? g1 : g2).push_back(read_interval(r, tok[1], tok[2]));
    if (first) {
      const Weight w = tok.size() == 4 ? r.number<Weight>(tok[3], "weight") : 1;
      if (w < 0) r.fail("negative weight");
      ws.push_back(w);
    }
  }
  if (r.next(tok)) r.fail("unexpected extra line");
  return TwoUnionInstance::build(g1, g2, k, std::move(ws));
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> tok;
  if (!r.next(tok)) throw InputError("line 1: empty instance file");
  r.expect_fields(tok, 3, 3);
  if (tok[0] == "cisl") {
    const auto n = r.number<std::size_t>(tok[1], "vertex count");
    const auto gamma = r.number<ColorId>(tok[2], "gamma");
    return parse_cisl(r, n, gamma);
  }
  if (tok[0] == "2union") {
    const auto n = r.number<std::size_t>(tok[1], "vertex count");
    const auto k = r.number<std::int64_t>(tok[2], "k");
    if (k < 0) r.fail("negative k");
    return parse_two_union(r, n, k);
  }
  r.fail("unknown header '" + tok[0] + "'");
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_instance(in);
}

void write_cisl(std::ostream& out, const ColoredIntervalGraph& g) {
  out << "cisl " << g.size() << ' ' << g.num_colors() << '\n';
  for (VertexId v = 0; v < g.size(); ++v) {
    out << "v " << g.rep()[v].start << ' ' << g.rep()[v].end << ' ' << g.weight(v) << ' ';
    bool first = true;
    for (ColorId c : g.colors(v)) {
      out << (first ? "" : ",") << c + 1;
      first = false;
    }
    out << '\n';
  }
}

void write_two_union(std::ostream& out, const TwoUnionInstance& t) {
  const bool unit = t.has_unit_weights();
  out << "2union " << t.size() << ' ' << t.k << '\n';
  for (VertexId v = 0; v < t.size(); ++v) {
    out << "g1 " << t.rep1[v].start << ' ' << t.rep1[v].end;
    if (!unit) out << ' ' << t.weights[v];
    out << '\n';
  }
  for (VertexId v = 0; v < t.size(); ++v) {
    out << "g2 " << t.rep2[v].start << ' ' << t.rep2[v].end << '\n';
  }
}

void write_instance(std::ostream& out, const Instance& inst) {
  if (const auto* g = std::get_if<ColoredIntervalGraph>(&inst)) {
    write_cisl(out, *g);
  } else {
    write_two_union(out, std::get<TwoUnionInstance>(inst));
  }
}

SolutionFile parse_solution(std::istream& in) {
  LineReader r(in);
  SolutionFile s;
  bool have_pick = false;
  std::vector<std::string> tok;
  while (r.next(tok)) {
    if (tok[0] == "value") {
      r.expect_fields(tok, 2, 2);
      if (s.value) r.fail("duplicate value line");
      s.value = r.number<Weight>(tok[1], "value");
    } else if (tok[0] == "pick") {
      if (have_pick) r.fail("duplicate pick line");
      have_pick = true;
      for (std::size_t i = 1; i < tok.size(); ++i) s.picks.push_back(r.number<VertexId>(tok[i], "vertex id"));
    } else if (tok[0] != "yes" && tok[0] != "no") {
      r.fail("unknown line '" + tok[0] + "'");
    }
  }
  if (!have_pick) throw InputError("solution has no pick line");
  return s;
}

Cnf3 parse_dimacs(std::istream& in) {
  LineReader r(in);
  Cnf3 f;
  std::vector<std::string> tok;
  std::size_t declared = 0;
  bool header = false;
  std::vector<int> clause;
  while (r.next(tok)) {
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (header) r.fail("duplicate problem line");
      r.expect_fields(tok, 4, 4);
      if (tok[1] != "cnf") r.fail("expected 'p cnf'");
      f.num_vars = r.number<int>(tok[2], "variable count");
      declared = r.number<std::size_t>(tok[3], "clause count");
      header = true;
      continue;
    }
    if (!header) r.fail("clause before problem line");
    for (const auto& t : tok) {
      const int lit = r.number<int>(t, "literal");
      if (lit == 0) {
        f.clauses.push_back(std::move(clause));
        clause.clear();
      } else {
        clause.push_back(lit);
      }
    }
  }
  if (!header) throw InputError("missing 'p cnf' line");
  if (!clause.empty()) throw InputError("last clause is not terminated by 0");
  if (f.clauses.size() != declared) {
    throw InputError("declared " + std::to_string(declared) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  f.validate();
  return f;
}

}  // namespace jis
