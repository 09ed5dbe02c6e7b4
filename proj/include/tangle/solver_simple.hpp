#pragma once

// Optimal tangles for simple lists: breadth-first search from the identity
// to id_n L in the graph whose vertices are the permutations pi with
// L(pi) <= L and whose edges apply a supported involution made only of
// swaps that pi has not performed yet.

#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tangle/permutation.hpp"
#include "tangle/solve_report.hpp"
#include "tangle/swap_list.hpp"
#include "tangle/tangle.hpp"

namespace tangle {

/// Largest wire count the packed-permutation solvers accept.
inline constexpr int kMaxSolverWires = 16;

namespace detail {

using PackedPerm = std::uint64_t;

inline PackedPerm pack(const std::vector<Wire>& order) {
  PackedPerm key = 0;
  for (std::size_t p = 0; p < order.size(); ++p) key |= PackedPerm(order[p]) << (4 * p);
  return key;
}

inline Wire packed_wire(PackedPerm key, int p) { return static_cast<Wire>(key >> (4 * p) & 0xF); }

inline PackedPerm packed_swap(PackedPerm key, int p) {
  PackedPerm a = key >> (4 * p) & 0xF;
  PackedPerm b = key >> (4 * (p + 1)) & 0xF;
  key &= ~((PackedPerm{0xFF}) << (4 * p));
  return key | (b << (4 * p)) | (a << (4 * (p + 1)));
}

inline Permutation unpack(PackedPerm key, int n) {
  std::vector<Wire> order(n);
  for (int p = 0; p < n; ++p) order[p] = packed_wire(key, p);
  return Permutation::from_wire_order(std::move(order));
}

inline void check_solver_order(int n) {
  if (n > kMaxSolverWires)
    throw std::invalid_argument("solvers support at most " + std::to_string(kMaxSolverWires) + " wires");
}

}  // namespace detail

struct SimpleOptions {
  Budget budget;
  /// Called with every vertex taken off the BFS queue.
  std::function<void(const Permutation&)> on_visit;
};

inline SolveReport solve_simple(const SwapList& list, const SimpleOptions& options = {}) {
  if (!list.is_simple()) throw std::invalid_argument("solve_simple requires a simple list");
  const int n = list.order();
  detail::check_solver_order(n);

  detail::BudgetClock clock(options.budget);
  SolveReport report;
  auto finish = [&](Verdict v) {
    report.verdict = v;
    report.elapsed_ms = clock.elapsed_ms();
    return report;
  };

  auto target_map = apply_list(Permutation::identity(n), list);
  if (!is_bijection(target_map)) return finish(Verdict::infeasible);
  const detail::PackedPerm target = detail::pack(Permutation::from_positions(target_map).wire_order());

  std::vector<std::uint8_t> allowed(n * n, 0);
  for (const auto& [p, c] : list.entries()) allowed[p.lo * n + p.hi] = 1;

  const auto matchings = position_matchings(n);
  const detail::PackedPerm start = detail::pack(Permutation::identity(n).wire_order());

  std::unordered_map<detail::PackedPerm, detail::PackedPerm> parent;
  parent.emplace(start, start);
  std::deque<detail::PackedPerm> queue{start};
  constexpr std::size_t kBytesPerVertex = 48;

  bool found = start == target;
  while (!found && !queue.empty()) {
    if (clock.tick()) return finish(Verdict::timeout);
    if (clock.over_memory(parent.size() * kBytesPerVertex)) return finish(Verdict::memout);
    const detail::PackedPerm current = queue.front();
    queue.pop_front();
    ++report.states_explored;
    if (options.on_visit) options.on_visit(detail::unpack(current, n));

    for (auto m : matchings) {
      detail::PackedPerm next = current;
      bool ok = true;
      for (int p = 0; p + 1 < n && ok; ++p) {
        if (!(m >> p & 1)) continue;
        Wire a = detail::packed_wire(current, p);
        Wire b = detail::packed_wire(current, p + 1);
        // a left of b: the pair is still uninverted iff a < b
        ok = a < b && allowed[a * n + b];
        next = detail::packed_swap(next, p);
      }
      if (!ok || parent.contains(next)) continue;
      parent.emplace(next, current);
      if (next == target) {
        found = true;
        break;
      }
      queue.push_back(next);
    }
  }
  report.states_stored = parent.size();
  if (!found) return finish(Verdict::infeasible);

  std::vector<Permutation> path;
  for (detail::PackedPerm v = target;; v = parent.at(v)) {
    path.push_back(detail::unpack(v, n));
    if (v == start) break;
  }
  std::reverse(path.begin(), path.end());
  report.tangle.emplace(std::move(path));
  return finish(Verdict::feasible);
}

}  // namespace tangle
