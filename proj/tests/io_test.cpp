#include <gtest/gtest.h>

#include <random>

#include "tangle/instances.hpp"
#include "tangle/io.hpp"
#include "tangle/solver_general.hpp"
#include "test_support.hpp"

using namespace tangle;
using testing_support::list_of;

TEST(ListJson, SerializesCanonically) {
  EXPECT_EQ(serialize_list(list_of(3, {{2, 3, 4}, {1, 2}})), "{\"n\": 3, \"swaps\": [[1, 2, 1], [2, 3, 4]]}\n");
  EXPECT_EQ(serialize_list(SwapList(2)), "{\"n\": 2, \"swaps\": []}\n");
}

TEST(ListJson, ParsesWithAnyFieldOrderAndSpacing) {
  auto l = parse_list("{ \"swaps\" : [ [2,3,4],[1,2,1] ],\n \"n\":3 }");
  EXPECT_EQ(l, list_of(3, {{2, 3, 4}, {1, 2}}));
}

TEST(ListJson, RejectsMalformedInput) {
  const char* bad[] = {
      "{\"n\": 3}",
      "{\"n\": 3, \"swaps\": [[1, 2, 1]], \"extra\": 1}",
      "{\"n\": 3, \"swaps\": [[1, 4, 1]]}",
      "{\"n\": 3, \"swaps\": [[2, 1, 1]]}",
      "{\"n\": 3, \"swaps\": [[1, 2, 0]]}",
      "{\"n\": 3, \"swaps\": [[1, 2, 1], [1, 2, 1]]}",
      "{\"n\": 3, \"swaps\": [[1, 2]]}",
      "{\"n\": 0, \"swaps\": []}",
      "{\"n\": \"3\", \"swaps\": []}",
      "{\"n\": 3, \"swaps\": [[1, 2, 1.5]]}",
      "{\"n\": 3, \"swaps\": [[1, 2, 1]]",
  };
  for (const char* text : bad) EXPECT_THROW(parse_list(text), ParseError) << text;
}

TEST(ListMatrix, RoundTripAndComments) {
  auto l = list_of(4, {{1, 2, 3}, {2, 4, 1}, {3, 4, 2}});
  auto text = serialize_list_matrix(l);
  EXPECT_EQ(text, "0 3 0 0\n3 0 0 1\n0 0 0 2\n0 1 2 0\n");
  EXPECT_EQ(parse_list(text), l);
  EXPECT_EQ(parse_list("# header\n\n0 1\n  1 0\n"), list_of(2, {{1, 2}}));
}

TEST(ListMatrix, ErrorsNameTheLine) {
  try {
    parse_list("# comment\n0 1 0\n1 0 2\n0 3 0\n");
    FAIL() << "asymmetric matrix accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    parse_list("0 1\n1 x\n");
    FAIL() << "non-numeric entry accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_list("0 1 0\n1 0\n"), ParseError);
  EXPECT_THROW(parse_list("1 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_list("0 -1\n-1 0\n"), ParseError);
  EXPECT_THROW(parse_list("\n# nothing\n"), ParseError);
}

TEST(ListRoundTrip, RandomListsSurviveBothFormats) {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(draw_below(rng, 9));
    SwapList l(n);
    for (Wire i = 0; i < n; ++i)
      for (Wire j = i + 1; j < n; ++j)
        if (draw_below(rng, 3) == 0) l.set(i, j, static_cast<Count>(1 + draw_below(rng, 1000)));
    EXPECT_EQ(parse_list(serialize_list(l)), l);
    EXPECT_EQ(parse_list(serialize_list_matrix(l)), l);
    EXPECT_EQ(serialize_list(parse_list(serialize_list(l))), serialize_list(l));
  }
}

TEST(TangleJson, RoundTrip) {
  for (const auto& l : {gen_Ln(4), gen_Ln(5), scaled(gen_E(3), 2), SwapList(3)}) {
    auto t = *solve_general(l).tangle;
    auto text = serialize_tangle(t);
    auto back = parse_tangle(text);
    EXPECT_EQ(back, t);
    EXPECT_EQ(serialize_tangle(back), text);
  }
}

TEST(TangleJson, RejectsBrokenTangles) {
  const char* bad[] = {
      "{\"n\": 2, \"perms\": []}",
      "{\"n\": 2, \"perms\": [[1, 2], [1, 2]]}",
      "{\"n\": 3, \"perms\": [[1, 2, 3], [3, 2, 1]]}",
      "{\"n\": 2, \"perms\": [[1, 1]]}",
      "{\"n\": 2, \"perms\": [[1, 3]]}",
      "{\"n\": 2, \"perms\": [[1]]}",
      "{\"n\": 2, \"perms\": [[1, 2]], \"height\": 1}",
  };
  for (const char* text : bad) EXPECT_THROW(parse_tangle(text), ParseError) << text;
}

TEST(ReportJson, CarriesVerdictHeightAndTangle) {
  auto report = solve_general(gen_E(3));
  auto doc = report_to_json(report, "general");
  EXPECT_EQ(doc["verdict"], "feasible");
  EXPECT_EQ(doc["height"], 4);
  EXPECT_EQ(doc["algo"], "general");
  EXPECT_EQ(tangle_from_json(doc["tangle"]), *report.tangle);
  auto none = report_to_json(solve_general(list_of(3, {{1, 3}})), "general");
  EXPECT_EQ(none["verdict"], "infeasible");
  EXPECT_FALSE(none.contains("tangle"));
}
