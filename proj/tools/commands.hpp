#pragma once

// Subcommand implementations for the `tangle` executable. Each returns the
// process exit status:
//
//   0  success; list feasible / property holds
//   1  list infeasible / property fails / counterexample found
//   2  time limit exceeded
//   3  memory limit exceeded
//   4  input error (unreadable file, malformed list or tangle)

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tangle/bench.hpp"
#include "tangle/feasibility.hpp"
#include "tangle/instances.hpp"
#include "tangle/io.hpp"
#include "tangle/render.hpp"
#include "tangle/solver_baseline.hpp"
#include "tangle/solver_general.hpp"
#include "tangle/solver_simple.hpp"

namespace tangle::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kTimeout = 2, kMemout = 3, kInputError = 4 };

inline int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::feasible: return kOk;
    case Verdict::infeasible: return kNegative;
    case Verdict::timeout: return kTimeout;
    case Verdict::memout: return kMemout;
  }
  return kInputError;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
}

struct BudgetArgs {
  double time_limit_s = 0.0;  // 0: unlimited
  double mem_limit_mb = 0.0;  // 0: unlimited

  Budget budget() const {
    Budget b;
    if (time_limit_s > 0) b.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit_s * 1000.0));
    if (mem_limit_mb > 0) b.memory_limit_bytes = static_cast<std::size_t>(mem_limit_mb * 1024.0 * 1024.0);
    return b;
  }
};

struct SolveArgs {
  std::string input;
  std::string output;  // tangle file; empty: tangle embedded in the report
  std::string algo = "general";
  BudgetArgs limits;
  bool no_dedup = false;
};

inline int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  SwapList list;
  try {
    list = parse_list(read_file(args.input));
  } catch (const ParseError& e) {
    err << "error: " << args.input << ": " << e.what() << '\n';
    return kInputError;
  }
  SolveReport report;
  try {
    report = solve_with(parse_algo(args.algo), list, args.limits.budget(), !args.no_dedup);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  nlohmann::json doc = report_to_json(report, args.algo);
  if (report.tangle && !args.output.empty()) {
    write_output(args.output, serialize_tangle(*report.tangle), out);
    doc.erase("tangle");
  }
  out << doc.dump(2) << '\n';
  return exit_code_for(report.verdict);
}

struct CheckArgs {
  std::string input;
  std::string mode = "feasibility";  // consistency | feasibility | non-separability
  BudgetArgs limits;
};

inline int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  SwapList list;
  try {
    list = parse_list(read_file(args.input));
  } catch (const ParseError& e) {
    err << "error: " << args.input << ": " << e.what() << '\n';
    return kInputError;
  }
  if (args.mode == "consistency") {
    bool ok = is_consistent(list);
    out << (ok ? "consistent" : "inconsistent") << '\n';
    return ok ? kOk : kNegative;
  }
  if (args.mode == "non-separability") {
    bool ok = is_non_separable(list);
    out << (ok ? "non-separable" : "separable") << '\n';
    return ok ? kOk : kNegative;
  }
  if (args.mode != "feasibility") {
    err << "error: unknown check mode '" << args.mode << "'\n";
    return kInputError;
  }
  FeasibilityVerdict verdict;
  if (list.is_simple()) {
    verdict = feasible_simple(list);
  } else if (list.is_odd()) {
    verdict = feasible_odd(list);
  } else {
    GeneralOptions options;
    options.budget = args.limits.budget();
    options.reconstruct = false;
    auto report = solve_general(list, options);
    if (!report.decided()) {
      out << to_string(report.verdict) << '\n';
      return exit_code_for(report.verdict);
    }
    verdict.feasible = report.feasible();
    verdict.method = FeasibilityMethod::solver;
  }
  out << (verdict.feasible ? "feasible" : "infeasible") << " (" << to_string(verdict.method) << ")\n";
  return verdict.feasible ? kOk : kNegative;
}

struct GenArgs {
  std::string family;  // Ln | E | random | hardness
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t seed = 0;
  int m = 0;
  std::uint64_t target = 0;
  std::vector<std::uint64_t> values;
  std::string format = "json";  // json | matrix
  std::string output;
};

inline int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  SwapList list;
  try {
    if (args.family == "Ln") {
      list = gen_Ln(args.n);
    } else if (args.family == "E") {
      list = gen_E(args.n);
    } else if (args.family == "random") {
      list = gen_random(args.n, args.total, args.seed).list;
    } else if (args.family == "hardness") {
      ThreePartitionInstance inst;
      if (!args.values.empty()) {
        inst.m = args.m > 0 ? args.m : static_cast<int>(args.values.size() / 3);
        inst.values = args.values;
      } else {
        inst = gen_three_partition(args.m, args.target, args.seed);
      }
      auto gadget = gen_hardness(inst);
      nlohmann::json info{{"height_bound", gadget.height_bound}, {"values", inst.values}};
      nlohmann::json roles = nlohmann::json::object();
      for (const auto& [name, wire] : gadget.roles) roles[name] = wire + 1;
      info["roles"] = roles;
      err << info.dump() << '\n';
      list = std::move(gadget.list);
    } else {
      err << "error: unknown family '" << args.family << "'\n";
      return kInputError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  write_output(args.output, args.format == "matrix" ? serialize_list_matrix(list) : serialize_list(list), out);
  return kOk;
}

struct RenderArgs {
  std::string input;
  std::string output;
  std::string format = "ascii";
  int column_width = 0;  // 0: format default
  int row_height = 0;
  bool labels = true;
};

inline int cmd_render(const RenderArgs& args, std::ostream& out, std::ostream& err) {
  try {
    Tangle t = parse_tangle(read_file(args.input));
    RenderSpec spec = args.format == "svg" ? RenderSpec::svg_defaults() : RenderSpec{};
    if (args.format != "svg" && args.format != "ascii") throw ParseError("unknown render format '" + args.format + "'");
    if (args.column_width > 0) spec.column_width = args.column_width;
    if (args.row_height > 0) spec.row_height = args.row_height;
    spec.labels = args.labels;
    write_output(args.output, render(t, spec), out);
  } catch (const std::exception& e) {
    err << "error: " << args.input << ": " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

struct BenchArgs {
  std::string input_dir;
  std::vector<std::string> algos{"general", "baseline"};
  BudgetArgs limits;
  int repeats = 1;
  int workers = 1;
  bool no_dedup = false;
  std::string output;   // run CSV; empty: stdout
  std::string summary;  // means CSV; empty: <output>.summary.csv, or stderr when output is stdout
};

/// Instance files in a directory (*.json, *.txt, *.mat), sorted by name; the
/// instance id is the file stem.
inline std::vector<BenchInstance> load_instances(const std::string& dir, std::ostream& err) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (ext == ".json" || ext == ".txt" || ext == ".mat") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchInstance> out;
  for (const auto& f : files) {
    try {
      out.push_back({f.stem().string(), parse_list(read_file(f.string()))});
    } catch (const ParseError& e) {
      err << "warning: skipping " << f.string() << ": " << e.what() << '\n';
    }
  }
  return out;
}

inline int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  try {
    config.algos.clear();
    for (const auto& a : args.algos) config.algos.push_back(parse_algo(a));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  config.budget = args.limits.budget();
  config.repeats = std::max(1, args.repeats);
  config.workers = std::max(1, args.workers);
  config.deduplicate = !args.no_dedup;

  std::vector<BenchInstance> instances;
  try {
    instances = load_instances(args.input_dir, err);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  auto records = run_bench(instances, config);
  auto summary = bench_summary_csv(bench_means(records));
  write_output(args.output, bench_csv(records), out);
  if (!args.summary.empty())
    write_output(args.summary, summary, out);
  else if (!args.output.empty() && args.output != "-")
    write_output(args.output + ".summary.csv", summary, out);
  else
    err << summary;
  return kOk;
}

struct VerifyArgs {
  int n = 0;
  Count bound = 2;
  int workers = 1;
  std::string output;
};

inline nlohmann::json conjecture_report_to_json(const ConjectureReport& r) {
  nlohmann::json counter = nlohmann::json::array();
  for (const auto& l : r.counterexamples) counter.push_back(nlohmann::json::parse(serialize_list(l)));
  return {{"n", r.n},
          {"entry_bound", r.entry_bound},
          {"lists_enumerated", r.lists_enumerated},
          {"non_separable", r.non_separable},
          {"confirmed_feasible", r.confirmed_feasible},
          {"undecided", r.undecided},
          {"counterexamples", counter}};
}

inline int cmd_verify_conjecture(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  ConjectureReport report;
  try {
    report = verify_conjecture(args.n, args.bound, args.workers);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  write_output(args.output, conjecture_report_to_json(report).dump(2) + "\n", out);
  return report.counterexamples.empty() && report.undecided == 0 ? kOk : kNegative;
}

}  // namespace tangle::cli
