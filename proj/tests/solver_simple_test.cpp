#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tangle/instances.hpp"
#include "tangle/solver_simple.hpp"
#include "test_support.hpp"

using namespace tangle;
using testing_support::audit;
using testing_support::list_of;
using testing_support::simple_list_at;
using testing_support::to_matrix;

TEST(SolveSimple, AllOnesOnThreeWiresNeedsFourPermutations) {
  auto report = solve_simple(gen_E(3));
  ASSERT_EQ(report.verdict, Verdict::feasible);
  ASSERT_TRUE(report.tangle.has_value());
  EXPECT_EQ(report.tangle->height(), 4);
  EXPECT_EQ(audit(*report.tangle, gen_E(3)), "");
  EXPECT_TRUE(report.tangle->is_simple());
}

TEST(SolveSimple, EmptyListIsTheIdentity) {
  auto report = solve_simple(SwapList(4));
  ASSERT_EQ(report.verdict, Verdict::feasible);
  EXPECT_EQ(report.height(), 1);
}

TEST(SolveSimple, DisjointSwapsShareALayer) {
  auto l = list_of(4, {{1, 2}, {3, 4}});
  auto report = solve_simple(l);
  ASSERT_TRUE(report.feasible());
  EXPECT_EQ(report.height(), 2);
  EXPECT_EQ(audit(*report.tangle, l), "");
}

TEST(SolveSimple, InconsistentListIsInfeasible) {
  auto report = solve_simple(list_of(3, {{1, 3}}));
  EXPECT_EQ(report.verdict, Verdict::infeasible);
  EXPECT_FALSE(report.tangle.has_value());
  EXPECT_EQ(report.height(), std::nullopt);
}

TEST(SolveSimple, RejectsNonSimpleLists) {
  EXPECT_THROW(solve_simple(list_of(3, {{1, 2, 2}})), std::invalid_argument);
}

TEST(SolveSimple, RejectsTooManyWires) { EXPECT_THROW(solve_simple(gen_E(kMaxSolverWires + 1)), std::invalid_argument); }

TEST(SolveSimple, VisitsOnlyPermutationsInsideTheList) {
  auto l = list_of(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
  int visits = 0;
  SimpleOptions options;
  options.on_visit = [&](const Permutation& pi) {
    ++visits;
    EXPECT_TRUE(simple_list_of(pi).is_sublist_of(l));
  };
  auto report = solve_simple(l, options);
  ASSERT_TRUE(report.feasible());
  EXPECT_GT(visits, 0);
}

TEST(SolveSimple, MatchesOracleOnEverySimpleListUpToFourWires) {
  for (int n = 2; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      auto l = simple_list_at(n, mask);
      auto expected = oracle::min_height(to_matrix(l));
      auto report = solve_simple(l);
      ASSERT_EQ(report.feasible(), expected.has_value()) << "n=" << n << " mask=" << mask;
      if (!expected) continue;
      EXPECT_EQ(report.height(), *expected) << "n=" << n << " mask=" << mask;
      EXPECT_EQ(audit(*report.tangle, l), "");
    }
  }
}

TEST(SolveSimple, AllOnesHeightIsNPlusOne) {
  // A pseudo-line arrangement of n >= 3 wires needs n layers.
  EXPECT_EQ(solve_simple(gen_E(2)).height(), 2);
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(solve_simple(gen_E(n)).height(), n + 1) << n;
}

TEST(SolveSimple, ZeroTimeLimitTimesOut) {
  SimpleOptions options;
  options.budget.time_limit = std::chrono::milliseconds(0);
  auto report = solve_simple(gen_E(9), options);
  EXPECT_EQ(report.verdict, Verdict::timeout);
  EXPECT_FALSE(report.decided());
}

TEST(SolveSimple, TinyMemoryLimitRunsOut) {
  SimpleOptions options;
  options.budget.memory_limit_bytes = 1024;
  auto report = solve_simple(gen_E(9), options);
  EXPECT_EQ(report.verdict, Verdict::memout);
}
