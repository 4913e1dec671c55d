#include <gtest/gtest.h>

#include <cmath>

#include "jisolve/branch.hpp"
#include "jisolve/dp.hpp"
#include "jisolve/error.hpp"
#include "support.hpp"

using namespace jis;

namespace {

ColoredIntervalGraph e1() {
  IntervalSet ivs{{1, 2}, {2, 3}, {3, 4}};
  return ColoredIntervalGraph::build(ivs, {{1}, {2}, {2}});
}

}  // namespace

TEST(FirstClique, Examples) {
  IntervalSet a{{1, 2}, {2, 3}, {4, 5}};
  EXPECT_EQ(first_clique(ColoredIntervalGraph::build(a, {{1}, {2}, {1}})).members,
            (std::vector<VertexId>{0, 1}));
  IntervalSet b{{3, 3}};
  EXPECT_EQ(first_clique(ColoredIntervalGraph::build(b, {{1}})).members, (std::vector<VertexId>{0}));
  IntervalSet c{{1, 2}, {1, 2}, {1, 2}};
  const FirstClique fc = first_clique(ColoredIntervalGraph::build(c, {{1}, {2}, {2}}));
  EXPECT_EQ(fc.members.size(), 3u);
  EXPECT_EQ(fc.colors.size(), 2u);
  EXPECT_THROW(first_clique(ColoredIntervalGraph{}), InputError);
}

TEST(Branch, Examples) {
  const BranchResult yes = solve_branch(e1(), 2);
  ASSERT_TRUE(yes.solution);
  EXPECT_EQ(yes.solution->vertices, (std::vector<VertexId>{0, 2}));
  EXPECT_FALSE(solve_branch(e1(), 3).solution);
  const BranchResult zero = solve_branch(e1(), 0);
  ASSERT_TRUE(zero.solution);
  EXPECT_TRUE(zero.solution->vertices.empty());
}

TEST(Branch, Preconditions) {
  IntervalSet ivs{{1, 1}};
  const auto weighted = ColoredIntervalGraph::build(ivs, {{1}}, {4});
  try {
    solve_branch(weighted, 1);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "branch solver is unweighted");
  }
  const auto lists = ColoredIntervalGraph::build(ivs, {{1, 2}});
  EXPECT_THROW(solve_branch(lists, 1), PreconditionError);
  BranchOptions o;
  o.allow_lists = true;
  EXPECT_TRUE(solve_branch(lists, 1, o).solution);
}

TEST(Branch, AgreesWithDpAndRespectsNodeBound) {
  fixtures::Rng rng(41);
  for (int iter = 0; iter < 500; ++iter) {
    const auto g = fixtures::random_jisp(rng, 1 + rng() % 14, 1 + static_cast<int>(rng() % 5), 10);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 5);
    const BranchResult r = solve_branch(g, k);
    ASSERT_EQ(r.solution.has_value(), decide(g, k));
    if (r.solution) {
      ASSERT_EQ(r.solution->vertices.size(), static_cast<std::size_t>(k));
      ASSERT_EQ(find_violation(g, r.solution->vertices), std::nullopt);
    }
    const double big_gamma = static_cast<double>(stats(g).Gamma);
    double bound = 0;
    for (std::int64_t j = 0; j <= k; ++j) bound += std::pow(big_gamma, static_cast<double>(j));
    ASSERT_LE(static_cast<double>(r.nodes), bound);
  }
}

TEST(Branch, ListModeIsExact) {
  fixtures::Rng rng(43);
  BranchOptions o;
  o.allow_lists = true;
  for (int iter = 0; iter < 300; ++iter) {
    const auto g = fixtures::random_cisl(rng, 1 + rng() % 12, 1 + static_cast<int>(rng() % 5), 10);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 5);
    const BranchResult r = solve_branch(g, k, o);
    ASSERT_EQ(r.solution.has_value(), decide(g, k));
    if (r.solution) {
      ASSERT_EQ(find_violation(g, r.solution->vertices), std::nullopt);
    }
  }
}
