#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "tangle/instances.hpp"
#include "tangle/io.hpp"
#include "tangle/solver_general.hpp"
#include "tangle/solver_simple.hpp"
#include "test_support.hpp"

using namespace tangle;
using testing_support::audit;
using testing_support::list_of;
using testing_support::to_matrix;

namespace {

struct Expected {
  const char* name;
  SwapList list;
  std::optional<int> height;  // nullopt: infeasible
};

// Heights computed by the brute-force oracle in oracle.hpp.
std::vector<Expected> known_heights() {
  return {
      {"E3", gen_E(3), 4},
      {"two disjoint swaps", list_of(4, {{1, 2}, {3, 4}}), 2},
      {"2*E3", scaled(gen_E(3), 2), 7},
      {"4*E3", scaled(gen_E(3), 4), 13},
      {"one pair three times", list_of(2, {{1, 2, 3}}), 4},
      {"one pair twice", list_of(3, {{1, 2, 2}}), 3},
      {"outer pair twice", list_of(3, {{1, 3, 2}}), std::nullopt},
      {"crossing pairs", list_of(4, {{1, 3}, {2, 4}}), std::nullopt},
      {"path of two", list_of(3, {{1, 2}, {2, 3}}), std::nullopt},
      {"chain of fours", list_of(4, {{1, 2, 4}, {2, 3, 4}, {3, 4, 4}}), 9},
      {"single pair four times", list_of(3, {{1, 2, 4}}), 5},
      {"L4", gen_Ln(4), 8},
      {"L5", gen_Ln(5), 11},
      {"L6", gen_Ln(6), 14},
  };
}

}  // namespace

TEST(SolveGeneral, KnownHeights) {
  for (const auto& e : known_heights()) {
    auto report = solve_general(e.list);
    ASSERT_TRUE(report.decided()) << e.name;
    EXPECT_EQ(report.feasible(), e.height.has_value()) << e.name;
    EXPECT_EQ(report.height(), e.height) << e.name;
    if (report.tangle) {
      EXPECT_EQ(audit(*report.tangle, e.list), "") << e.name;
    }
  }
}

TEST(SolveGeneral, KnownHeightsAgreeWithOracle) {
  for (const auto& e : known_heights()) {
    if (e.list.order() > 5) continue;
    EXPECT_EQ(oracle::min_height(to_matrix(e.list)), e.height) << e.name;
  }
}

TEST(SolveGeneral, EmptyListHasHeightOne) {
  auto report = solve_general(SwapList(5));
  ASSERT_TRUE(report.feasible());
  EXPECT_EQ(report.height(), 1);
  EXPECT_EQ(report.tangle->order(), 5);
}

TEST(SolveGeneral, AgreesWithSimpleSolverOnSimpleLists) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + static_cast<int>(draw_below(rng, 3));
    auto l = testing_support::simple_list_at(n, draw_below(rng, std::uint64_t{1} << (n * (n - 1) / 2)));
    EXPECT_EQ(solve_general(l).height(), solve_simple(l).height());
  }
}

TEST(SolveGeneral, AgreesWithOracleOnRandomLists) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 3 + static_cast<int>(draw_below(rng, 2));
    SwapList l(n);
    const int total = 1 + static_cast<int>(draw_below(rng, 7));
    for (int t = 0; t < total; ++t) {
      Wire a = static_cast<Wire>(draw_below(rng, n));
      Wire b = static_cast<Wire>(draw_below(rng, n - 1));
      if (b >= a) ++b;
      l.add(a, b, 1);
    }
    auto expected = oracle::min_height(to_matrix(l));
    auto report = solve_general(l);
    ASSERT_EQ(report.height(), expected) << serialize_list(l);
    if (report.tangle) {
      EXPECT_EQ(audit(*report.tangle, l), "");
    }
  }
}

TEST(SolveGeneral, SolvesBlocksSeparatelyAndMergesThem) {
  // Two independent blocks of different heights plus a free wire between.
  auto l = list_of(6, {{1, 2, 3}, {4, 5}, {4, 6}, {5, 6}});
  auto report = solve_general(l);
  ASSERT_TRUE(report.feasible());
  EXPECT_EQ(report.height(), 4);
  EXPECT_EQ(audit(*report.tangle, l), "");
}

TEST(SolveGeneral, FeasibilityOnlySkipsTheTangle) {
  GeneralOptions options;
  options.reconstruct = false;
  auto report = solve_general(gen_Ln(5), options);
  EXPECT_TRUE(report.feasible());
  EXPECT_FALSE(report.tangle.has_value());
  EXPECT_TRUE(is_feasible(gen_Ln(5)));
  EXPECT_FALSE(is_feasible(list_of(3, {{1, 3, 2}})));
}

TEST(SublistCount, MatchesOdometerEnumeration) {
  for (const auto& l : {gen_Ln(4), gen_Ln(5), scaled(gen_E(3), 2), list_of(3, {{1, 2, 7}})}) {
    EXPECT_EQ(sublist_count(l), oracle::count_sublists(to_matrix(l)));
  }
  EXPECT_EQ(sublist_count(gen_Ln(5)), 1080u);
  EXPECT_EQ(sublist_count(scaled(gen_E(3), 2)), 27u);
  EXPECT_EQ(sublist_count(gen_Ln(7)), 1741824u);
  EXPECT_EQ(sublist_count(SwapList(3)), 1u);
}

TEST(SublistCount, ReportsOverflow) {
  SwapList l(16);
  for (Wire i = 0; i < 16; ++i)
    for (Wire j = i + 1; j < 16; ++j) l.set(i, j, 1000);
  EXPECT_EQ(sublist_count(l), std::nullopt);
}

TEST(SolveGeneral, EntriesAreEstablishedInOrderOfLength) {
  // Every entry is derived from a strictly shorter predecessor, and lengths
  // never decrease along the enumeration.
  GeneralOptions options;
  std::uint64_t last = 0;
  std::uint64_t entries = 0;
  options.on_entry = [&](std::uint64_t length, std::int64_t pred) {
    EXPECT_GE(length, last);
    last = length;
    if (length == 0) {
      EXPECT_EQ(pred, -1);
    } else {
      EXPECT_GE(pred, 0);
      EXPECT_LT(pred, static_cast<std::int64_t>(length));
    }
    ++entries;
  };
  auto report = solve_general(gen_Ln(5), options);
  ASSERT_TRUE(report.feasible());
  EXPECT_EQ(last, gen_Ln(5).length());
  EXPECT_GT(entries, 1u);
  EXPECT_LE(entries, 1080u);
}

TEST(SolveGeneral, ExploresEverySublistOnce) {
  auto report = solve_general(gen_Ln(5));
  EXPECT_EQ(report.states_explored, 1080u);
}

TEST(SolveGeneral, ZeroTimeLimitTimesOut) {
  GeneralOptions options;
  options.budget.time_limit = std::chrono::milliseconds(0);
  EXPECT_EQ(solve_general(gen_Ln(6), options).verdict, Verdict::timeout);
  EXPECT_THROW(is_feasible(gen_Ln(6), options.budget), std::runtime_error);
}

TEST(SolveGeneral, TableLargerThanMemoryLimitIsMemout) {
  GeneralOptions options;
  options.budget.memory_limit_bytes = 1000;
  EXPECT_EQ(solve_general(gen_Ln(6), options).verdict, Verdict::memout);
}

TEST(SolveGeneral, RejectsBlocksWithTooManyWires) {
  EXPECT_THROW(solve_general(gen_E(kMaxSolverWires + 1)), std::invalid_argument);
}
