// tangle: solve, check, generate, render and benchmark tangle-height
// instances. See README.md for the file formats and exit statuses.

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_limits(CLI::App* cmd, tangle::cli::BudgetArgs& limits) {
  cmd->add_option("--time-limit", limits.time_limit_s, "Wall-clock limit in seconds (0 = none)");
  cmd->add_option("--mem-limit", limits.mem_limit_mb, "Approximate memory limit in MiB (0 = none)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tangle::cli;
  CLI::App app{"Tangle-height minimization toolkit"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an optimal tangle for a swap list");
  solve_cmd->add_option("--input", solve.input, "Swap list file")->required();
  solve_cmd->add_option("--output", solve.output, "Write the tangle here instead of into the report");
  solve_cmd->add_option("--algo", solve.algo, "simple | general | baseline")
      ->check(CLI::IsMember({"simple", "general", "baseline"}));
  solve_cmd->add_flag("--no-dedup", solve.no_dedup, "Baseline: expand the plain search tree");
  add_limits(solve_cmd, solve.limits);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide a property of a swap list");
  check_cmd->add_option("--input", check.input, "Swap list file")->required();
  check_cmd->add_option("--mode", check.mode, "consistency | feasibility | non-separability")
      ->check(CLI::IsMember({"consistency", "feasibility", "non-separability"}));
  add_limits(check_cmd, check.limits);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen.family, "Ln | E | random | hardness")
      ->required()
      ->check(CLI::IsMember({"Ln", "E", "random", "hardness"}));
  gen_cmd->add_option("--n", gen.n, "Wire count (Ln, E, random)");
  gen_cmd->add_option("--total", gen.total, "Number of swaps (random)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (random, hardness)");
  gen_cmd->add_option("--m", gen.m, "Group count (hardness)");
  gen_cmd->add_option("--target", gen.target, "Group sum B for a generated 3-Partition instance (hardness)");
  gen_cmd->add_option("--values", gen.values, "Explicit 3-Partition values (hardness)")->delimiter(',');
  gen_cmd->add_option("--format", gen.format, "json | matrix")->check(CLI::IsMember({"json", "matrix"}));
  gen_cmd->add_option("--output", gen.output, "Output file (default stdout)");

  RenderArgs rend;
  auto* render_cmd = app.add_subcommand("render", "Draw a tangle as ascii or svg");
  render_cmd->add_option("--input", rend.input, "Tangle file")->required();
  render_cmd->add_option("--output", rend.output, "Output file (default stdout)");
  render_cmd->add_option("--format", rend.format, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--column-width", rend.column_width, "Units per wire position");
  render_cmd->add_option("--row-height", rend.row_height, "Units per layer");
  bool no_labels = false;
  render_cmd->add_flag("--no-labels", no_labels, "Omit wire labels");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run solvers over a directory of instances");
  bench_cmd->add_option("--input", bench.input_dir, "Instance directory")->required();
  bench_cmd->add_option("--algo", bench.algos, "Algorithms to run (repeatable)");
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per instance and algorithm");
  bench_cmd->add_option("--workers", bench.workers, "Concurrent runs");
  bench_cmd->add_option("--output", bench.output, "Run CSV (default stdout)");
  bench_cmd->add_option("--summary", bench.summary, "Means CSV");
  bench_cmd->add_flag("--no-dedup", bench.no_dedup, "Baseline: expand the plain search tree");
  add_limits(bench_cmd, bench.limits);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-conjecture", "Check that non-separable even lists are feasible");
  verify_cmd->add_option("--n", verify.n, "Wire count")->required();
  verify_cmd->add_option("--bound", verify.bound, "Largest (even) entry to enumerate");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads");
  verify_cmd->add_option("--output", verify.output, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, std::cout, std::cerr);
    if (*check_cmd) return cmd_check(check, std::cout, std::cerr);
    if (*gen_cmd) return cmd_gen(gen, std::cout, std::cerr);
    if (*render_cmd) {
      rend.labels = !no_labels;
      return cmd_render(rend, std::cout, std::cerr);
    }
    if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
    if (*verify_cmd) return cmd_verify_conjecture(verify, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
