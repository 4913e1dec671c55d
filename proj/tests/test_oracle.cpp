#include <gtest/gtest.h>

#include "jisolve/error.hpp"
#include "jisolve/oracle.hpp"
#include "support.hpp"

using namespace jis;

TEST(BruteCis, Examples) {
  IntervalSet ivs{{1, 2}, {2, 3}, {3, 4}};
  const Solution s = brute_max_cis(ColoredIntervalGraph::build(ivs, {{1}, {2}, {2}}));
  EXPECT_EQ(s.value, 2);
  EXPECT_EQ(s.vertices, (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(brute_max_cis(ColoredIntervalGraph{}).value, 0);
  IntervalSet one{{1, 1}};
  EXPECT_EQ(brute_max_cis(ColoredIntervalGraph::build(one, {{1}}, {7})).value, 7);
}

TEST(BruteCis, TieBreakPrefersLowIds) {
  IntervalSet ivs{{1, 1}, {1, 1}, {2, 2}};
  const Solution s = brute_max_cis(ColoredIntervalGraph::build(ivs, {{1}, {2}, {3}}));
  EXPECT_EQ(s.vertices, (std::vector<VertexId>{0, 2}));
}

TEST(BruteCis, Limit) {
  IntervalSet ivs(25, Interval{1, 1});
  std::vector<std::vector<ColorId>> cols(25, {1});
  EXPECT_THROW(brute_max_cis(ColoredIntervalGraph::build(ivs, cols)), LimitError);
}

TEST(BruteTwoUnion, Examples) {
  IntervalSet apart{{1, 1}, {2, 2}, {3, 3}};
  EXPECT_EQ(brute_two_union(TwoUnionInstance::build(apart, apart, 0)).value, 3);
  IntervalSet clique{{1, 1}, {1, 1}, {1, 1}};
  EXPECT_EQ(brute_two_union(TwoUnionInstance::build(clique, clique, 0)).value, 1);
  IntervalSet g1{{1, 1}, {1, 1}, {2, 2}}, g2{{1, 1}, {2, 2}, {2, 2}};
  EXPECT_EQ(brute_two_union(TwoUnionInstance::build(g1, g2, 0)).value, 2);
}

TEST(BrutePareto, Examples) {
  EXPECT_EQ(brute_pareto({{0, 0, 0, 0}, {1, 1, 1, 1}}), (std::vector<std::size_t>{1}));
  EXPECT_EQ(brute_pareto({{5, 5, 5, 5}}), (std::vector<std::size_t>{0}));
  EXPECT_EQ(brute_pareto({{1, 2, 3, 4}, {1, 2, 3, 4}}), (std::vector<std::size_t>{0}));
}

TEST(Sat, Examples) {
  EXPECT_TRUE(sat3_satisfiable(Cnf3{1, {{1}}}));
  EXPECT_FALSE(sat3_satisfiable(Cnf3{1, {{1}, {-1}}}));
  EXPECT_FALSE(sat3_satisfiable(Cnf3{2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}}));
  EXPECT_TRUE(sat3_satisfiable(Cnf3{2, {{1, 2}, {-1, 2}, {1, -2}}}));
  EXPECT_TRUE(sat3_satisfiable(Cnf3{3, {}}));
}

TEST(Sat, Validation) {
  EXPECT_THROW((Cnf3{2, {{1, -1}}}.validate()), InputError);
  EXPECT_THROW((Cnf3{2, {{3}}}.validate()), InputError);
  EXPECT_THROW((Cnf3{4, {{1, 2, 3, 4}}}.validate()), InputError);
  EXPECT_THROW((Cnf3{2, {{}}}.validate()), InputError);
  EXPECT_THROW(sat3_satisfiable(Cnf3{21, {{1}}}), LimitError);
}
