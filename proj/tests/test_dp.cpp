#include <gtest/gtest.h>

#include "jisolve/dp.hpp"
#include "jisolve/error.hpp"
#include "jisolve/oracle.hpp"
#include "support.hpp"

using namespace jis;

namespace {

ColoredIntervalGraph e1() {
  IntervalSet ivs{{1, 2}, {2, 3}, {3, 4}};
  return ColoredIntervalGraph::build(ivs, {{1}, {2}, {2}});
}

DpOptions unit() {
  DpOptions o;
  o.unit_weights = true;
  return o;
}

}  // namespace

TEST(DpGamma, Examples) {
  EXPECT_EQ(solve_dp_gamma(ColoredIntervalGraph{}), 0);
  EXPECT_EQ(solve_dp_gamma(e1()), 2);
  IntervalSet clique{{1, 3}, {1, 3}, {1, 3}};
  EXPECT_EQ(solve_dp_gamma(ColoredIntervalGraph::build(clique, {{1}, {2}, {3}})), 1);
}

TEST(DpGamma, LimitError) {
  DpOptions o;
  o.max_gamma = 2;
  IntervalSet ivs{{1, 1}, {2, 2}, {3, 3}};
  const auto g = ColoredIntervalGraph::build(ivs, {{1}, {2}, {3}});
  try {
    solve_dp_gamma(g, o);
    FAIL() << "expected LimitError";
  } catch (const LimitError& e) {
    EXPECT_NE(std::string(e.what()).find("gamma too large for reference DP"), std::string::npos);
  }
}

TEST(DpQ, Examples) {
  EXPECT_EQ(solve_dp_q(ColoredIntervalGraph{}).value, 0);
  const DpResult r = solve_dp_q(e1(), DpMode::kWitness);
  EXPECT_EQ(r.value, 2);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->vertices, (std::vector<VertexId>{0, 2}));

  IntervalSet ivs{{1, 2}, {1, 2}};
  const auto w = ColoredIntervalGraph::build(ivs, {{1}, {2}}, {5, 3});
  const DpResult rw = solve_dp_q(w, DpMode::kWitness);
  EXPECT_EQ(rw.value, 5);
  EXPECT_EQ(rw.witness->vertices, (std::vector<VertexId>{0}));
}

TEST(DpQ, LimitReportsQ) {
  DpOptions o;
  o.max_q = 1;
  IntervalSet ivs{{1, 1}, {1, 1}};
  const auto g = ColoredIntervalGraph::build(ivs, {{1, 2}, {1, 2}});
  try {
    solve_dp_q(g, DpMode::kValue, o);
    FAIL() << "expected LimitError";
  } catch (const LimitError& e) {
    EXPECT_NE(std::string(e.what()).find("Q = 2"), std::string::npos) << e.what();
  }
}

TEST(DpQ, ValueModeUsesRingOfEllPlusTwo) {
  fixtures::Rng rng(19);
  const auto g = fixtures::random_cisl(rng, 200, 5, 40);
  const auto st = stats(g);
  const DpResult r = solve_dp_q(g);
  EXPECT_EQ(r.table_entries, (std::size_t{1} << st.q) * static_cast<std::size_t>(st.ell + 2));
  EXPECT_EQ(r.decision_entries, 0u);
  const DpResult w = solve_dp_q(g, DpMode::kWitness);
  EXPECT_LE(w.decision_entries, (std::size_t{1} << st.q) * static_cast<std::size_t>(st.c + 1));
}

TEST(Decide, Examples) {
  EXPECT_TRUE(decide(e1(), 2));
  EXPECT_FALSE(decide(e1(), 3));
  EXPECT_TRUE(decide(e1(), 0));
  EXPECT_TRUE(decide(ColoredIntervalGraph{}, 0));
}

TEST(DpQ, TableBaseRowIsZero) {
  fixtures::Rng rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    const auto g = fixtures::random_cisl(rng, 1 + rng() % 10, 4, 8, 5);
    const auto rows = dp_q_table(g);
    for (Weight x : rows.back()) ASSERT_EQ(x, 0);
    ASSERT_EQ(rows.front().back(), solve_dp_q(g).value);
  }
}

TEST(DpQ, AgreesWithReferenceAndOracle) {
  fixtures::Rng rng(29);
  for (int iter = 0; iter < 400; ++iter) {
    const bool weighted = iter % 2;
    const auto g = fixtures::random_cisl(rng, rng() % 15, 1 + static_cast<int>(rng() % 6),
                                        1 + static_cast<Position>(rng() % 10), weighted ? 10 : 1);
    const Solution oracle = brute_max_cis(g);
    const DpResult v = solve_dp_q(g);
    const DpResult w = solve_dp_q(g, DpMode::kWitness);
    ASSERT_EQ(solve_dp_gamma(g), oracle.value);
    ASSERT_EQ(v.value, oracle.value);
    ASSERT_EQ(w.value, oracle.value);
    ASSERT_EQ(find_violation(g, w.witness->vertices), std::nullopt);
    ASSERT_EQ(w.witness->value, oracle.value);
    // Cardinality mode on the same graph.
    ASSERT_EQ(solve_dp_q(g, DpMode::kValue, unit()).value, brute_max_cis(g, true).value);
  }
}

TEST(DpQ, Monotonicity) {
  fixtures::Rng rng(31);
  for (int iter = 0; iter < 150; ++iter) {
    const auto g = fixtures::random_cisl(rng, 2 + rng() % 10, 4, 8, 6);
    const Weight base = solve_dp_q(g).value;
    // Dropping a vertex cannot help.
    std::vector<VertexId> keep;
    for (VertexId v = 1; v < g.size(); ++v) keep.push_back(v);
    ASSERT_LE(solve_dp_q(induced_subgraph(g, keep).graph).value, base);
    // Shrinking a list cannot hurt.
    auto lists = g.color_lists_as_labels();
    for (auto& l : lists) {
      if (l.size() > 1) {
        l.pop_back();
        break;
      }
    }
    std::vector<Weight> ws(g.weights().begin(), g.weights().end());
    const auto shrunk = ColoredIntervalGraph::build(g.rep().intervals(), lists, ws);
    ASSERT_GE(solve_dp_q(shrunk).value, base);
  }
}

TEST(DpQ, OverflowIsReported) {
  IntervalSet ivs{{1, 1}, {2, 2}};
  const Weight big = std::numeric_limits<Weight>::max() / 2 + 1;
  const auto g = ColoredIntervalGraph::build(ivs, {{1}, {2}}, {big, big});
  EXPECT_THROW(solve_dp_q(g), Error);
}
