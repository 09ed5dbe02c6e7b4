#include <gtest/gtest.h>

#include <sstream>

#include "tangle/bench.hpp"
#include "tangle/instances.hpp"
#include "test_support.hpp"

using namespace tangle;
using testing_support::list_of;

namespace {

std::vector<BenchInstance> small_instances() {
  return {{"l5", gen_Ln(5)}, {"e3", gen_E(3)}, {"bad", list_of(3, {{1, 3, 2}})}};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Algo, NamesRoundTrip) {
  for (Algo a : {Algo::simple, Algo::general, Algo::baseline}) EXPECT_EQ(parse_algo(to_string(a)), a);
  EXPECT_THROW(parse_algo("dp"), std::invalid_argument);
}

TEST(RunBench, OneRecordPerInstanceAlgoAndRepeat) {
  BenchConfig config;
  config.algos = {Algo::general, Algo::baseline, Algo::simple};
  config.repeats = 2;
  auto records = run_bench(small_instances(), config);
  ASSERT_EQ(records.size(), 3u * 3u * 2u);
  // Sorted by n, then |L|: e3 (n=3, 3), bad (n=3, 2) -> bad first.
  EXPECT_EQ(records.front().instance_id, "bad");
  EXPECT_EQ(records.back().instance_id, "l5");
  for (const auto& r : records) {
    if (r.instance_id == "l5" && r.algo != Algo::simple) {
      EXPECT_EQ(r.verdict, "feasible");
      EXPECT_EQ(r.height, 11);
    }
    if (r.instance_id == "l5" && r.algo == Algo::simple) {
      EXPECT_EQ(r.verdict, "error");
    }
    if (r.instance_id == "bad" && r.algo != Algo::simple) {
      EXPECT_EQ(r.verdict, "infeasible");
    }
    if (r.instance_id == "e3") {
      EXPECT_EQ(r.height, 4);
    }
  }
}

TEST(RunBench, WorkerCountDoesNotChangeResults) {
  BenchConfig one;
  one.repeats = 2;
  BenchConfig many = one;
  many.workers = 3;
  auto a = run_bench(small_instances(), one);
  auto b = run_bench(small_instances(), many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].instance_id, b[k].instance_id);
    EXPECT_EQ(a[k].algo, b[k].algo);
    EXPECT_EQ(a[k].repeat, b[k].repeat);
    EXPECT_EQ(a[k].verdict, b[k].verdict);
    EXPECT_EQ(a[k].height, b[k].height);
    EXPECT_EQ(a[k].states_explored, b[k].states_explored);
  }
}

TEST(BenchCsv, HeaderAndRows) {
  BenchConfig config;
  config.algos = {Algo::general};
  auto csv = bench_csv(run_bench(small_instances(), config));
  auto lines = lines_of(csv);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "instance_id,n,L_size,algo,repeat,verdict,height,elapsed_ms,states_explored");
  EXPECT_EQ(lines[1].rfind("bad,3,2,general,0,infeasible,,", 0), 0u) << lines[1];
  EXPECT_EQ(lines[3].rfind("l5,5,13,general,0,feasible,11,", 0), 0u) << lines[3];
}

TEST(BenchMeans, AveragesOverRepeats) {
  std::vector<BenchRecord> records{
      {"a", 3, 3, Algo::general, 0, "feasible", 4, 2.0, 10},
      {"a", 3, 3, Algo::general, 1, "feasible", 4, 4.0, 20},
      {"a", 3, 3, Algo::baseline, 0, "timeout", std::nullopt, 6.0, 30},
  };
  auto means = bench_means(records);
  ASSERT_EQ(means.size(), 2u);
  EXPECT_EQ(means[0].runs, 2);
  EXPECT_EQ(means[0].feasible_runs, 2);
  EXPECT_DOUBLE_EQ(means[0].mean_elapsed_ms, 3.0);
  EXPECT_DOUBLE_EQ(means[0].mean_states_explored, 15.0);
  EXPECT_EQ(means[1].feasible_runs, 0);
  auto lines = lines_of(bench_summary_csv(means));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "instance_id,n,L_size,algo,runs,feasible_runs,mean_elapsed_ms,mean_states_explored");
  EXPECT_EQ(lines[1], "a,3,3,general,2,2,3.000,15.000");
}
