#pragma once

// Benchmark harness: runs solvers over a set of instances, one CSV row per
// (instance, algorithm, repeat), plus per-(instance, algorithm) means.
//
// Run CSV columns:
//   instance_id,n,L_size,algo,repeat,verdict,height,elapsed_ms,states_explored
// verdict is feasible|infeasible|timeout|memout|error; height is empty
// unless the verdict is feasible.
//
// Summary CSV columns:
//   instance_id,n,L_size,algo,runs,feasible_runs,mean_elapsed_ms,mean_states_explored

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "tangle/solve_report.hpp"
#include "tangle/solver_baseline.hpp"
#include "tangle/solver_general.hpp"
#include "tangle/solver_simple.hpp"
#include "tangle/swap_list.hpp"

namespace tangle {

enum class Algo { simple, general, baseline };

inline std::string_view to_string(Algo a) {
  switch (a) {
    case Algo::simple: return "simple";
    case Algo::general: return "general";
    case Algo::baseline: return "baseline";
  }
  return "unknown";
}

inline Algo parse_algo(std::string_view name) {
  if (name == "simple") return Algo::simple;
  if (name == "general") return Algo::general;
  if (name == "baseline") return Algo::baseline;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

inline SolveReport solve_with(Algo algo, const SwapList& list, const Budget& budget, bool deduplicate = true) {
  switch (algo) {
    case Algo::simple: return solve_simple(list, {budget, {}});
    case Algo::general: {
      GeneralOptions options;
      options.budget = budget;
      return solve_general(list, options);
    }
    case Algo::baseline: return solve_baseline(list, {budget, deduplicate});
  }
  throw std::invalid_argument("unknown algorithm");
}

struct BenchInstance {
  std::string id;
  SwapList list;
};

struct BenchRecord {
  std::string instance_id;
  int n = 0;
  std::uint64_t list_size = 0;
  Algo algo = Algo::general;
  int repeat = 0;
  std::string verdict;
  std::optional<int> height;
  double elapsed_ms = 0.0;
  std::uint64_t states_explored = 0;
};

struct BenchConfig {
  std::vector<Algo> algos{Algo::general, Algo::baseline};
  Budget budget;
  int repeats = 1;
  int workers = 1;
  bool deduplicate = true;
};

inline std::vector<BenchRecord> run_bench(const std::vector<BenchInstance>& instances, const BenchConfig& config) {
  struct Job {
    const BenchInstance* instance;
    Algo algo;
    int repeat;
  };
  std::vector<Job> jobs;
  for (const auto& inst : instances)
    for (Algo a : config.algos)
      for (int r = 0; r < config.repeats; ++r) jobs.push_back({&inst, a, r});

  std::vector<BenchRecord> records(jobs.size());
  auto run_job = [&](std::size_t k) {
    const Job& job = jobs[k];
    BenchRecord& rec = records[k];
    rec.instance_id = job.instance->id;
    rec.n = job.instance->list.order();
    rec.list_size = job.instance->list.length();
    rec.algo = job.algo;
    rec.repeat = job.repeat;
    try {
      SolveReport report = solve_with(job.algo, job.instance->list, config.budget, config.deduplicate);
      rec.verdict = std::string(to_string(report.verdict));
      rec.height = report.height();
      rec.elapsed_ms = report.elapsed_ms;
      rec.states_explored = report.states_explored;
    } catch (const std::exception&) {
      rec.verdict = "error";
    }
  };

  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k) run_job(k);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        for (std::size_t k = w; k < jobs.size(); k += workers) run_job(k);
      });
    for (auto& t : threads) t.join();
  }

  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::make_tuple(a.n, a.list_size, a.instance_id, to_string(a.algo), a.repeat) <
           std::make_tuple(b.n, b.list_size, b.instance_id, to_string(b.algo), b.repeat);
  });
  return records;
}

inline std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance_id,n,L_size,algo,repeat,verdict,height,elapsed_ms,states_explored\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& r : records) {
    out << r.instance_id << ',' << r.n << ',' << r.list_size << ',' << to_string(r.algo) << ',' << r.repeat << ','
        << r.verdict << ',';
    if (r.height) out << *r.height;
    out << ',' << r.elapsed_ms << ',' << r.states_explored << '\n';
  }
  return out.str();
}

struct BenchMean {
  std::string instance_id;
  int n = 0;
  std::uint64_t list_size = 0;
  Algo algo = Algo::general;
  int runs = 0;
  int feasible_runs = 0;
  double mean_elapsed_ms = 0.0;
  double mean_states_explored = 0.0;
};

/// Arithmetic means over the repeats of each (instance, algorithm), in
/// record order.
inline std::vector<BenchMean> bench_means(const std::vector<BenchRecord>& records) {
  std::vector<BenchMean> out;
  for (const auto& r : records) {
    if (out.empty() || out.back().instance_id != r.instance_id || out.back().algo != r.algo) {
      out.push_back({r.instance_id, r.n, r.list_size, r.algo});
    }
    BenchMean& m = out.back();
    ++m.runs;
    m.feasible_runs += r.verdict == "feasible";
    m.mean_elapsed_ms += r.elapsed_ms;
    m.mean_states_explored += static_cast<double>(r.states_explored);
  }
  for (auto& m : out) {
    m.mean_elapsed_ms /= m.runs;
    m.mean_states_explored /= m.runs;
  }
  return out;
}

inline std::string bench_summary_csv(const std::vector<BenchMean>& means) {
  std::ostringstream out;
  out << "instance_id,n,L_size,algo,runs,feasible_runs,mean_elapsed_ms,mean_states_explored\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& m : means)
    out << m.instance_id << ',' << m.n << ',' << m.list_size << ',' << to_string(m.algo) << ',' << m.runs << ','
        << m.feasible_runs << ',' << m.mean_elapsed_ms << ',' << m.mean_states_explored << '\n';
  return out.str();
}

}  // namespace tangle
