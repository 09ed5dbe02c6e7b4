#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/tangle.hpp"

namespace tangle {

enum class Verdict { feasible, infeasible, timeout, memout };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::infeasible: return "infeasible";
    case Verdict::timeout: return "timeout";
    case Verdict::memout: return "memout";
  }
  return "unknown";
}

/// Optional wall-clock and approximate memory ceilings for one solve.
struct Budget {
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::size_t> memory_limit_bytes;
};

/// Outcome of one solver run.
struct SolveReport {
  Verdict verdict = Verdict::infeasible;
  std::optional<Tangle> tangle;
  std::uint64_t states_explored = 0;
  /// States held in memory at the end (table cells, visited set, tree nodes).
  std::uint64_t states_stored = 0;
  /// Baseline only: number of nodes generated at each depth.
  std::vector<std::uint64_t> level_sizes;
  double elapsed_ms = 0.0;

  bool feasible() const { return verdict == Verdict::feasible; }
  bool decided() const { return verdict == Verdict::feasible || verdict == Verdict::infeasible; }
  std::optional<int> height() const {
    if (!tangle) return std::nullopt;
    return tangle->height();
  }
};

namespace detail {

/// Tracks elapsed time against a budget; polls the clock only every
/// `stride` ticks.
class BudgetClock {
 public:
  explicit BudgetClock(const Budget& budget, std::uint32_t stride = 1024)
      : budget_(budget), stride_(stride), start_(std::chrono::steady_clock::now()) {}

  bool tick() {
    if (!budget_.time_limit) return false;
    if (++counter_ < stride_) return expired_;
    counter_ = 0;
    expired_ = std::chrono::steady_clock::now() - start_ >= *budget_.time_limit;
    return expired_;
  }

  bool over_memory(std::size_t bytes) const {
    return budget_.memory_limit_bytes && bytes > *budget_.memory_limit_bytes;
  }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Budget budget_;
  std::uint32_t stride_;
  std::uint32_t counter_ = 0;
  bool expired_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail
}  // namespace tangle
