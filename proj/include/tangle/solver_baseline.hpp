#pragma once

// Layer-by-layer search: breadth-first over states (current permutation,
// swaps still to perform). Without deduplication this is the plain search
// tree with up to F_{n+1} - 1 children per node; with deduplication each
// (permutation, remaining) state is expanded once. Both give optimal heights.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "tangle/permutation.hpp"
#include "tangle/solve_report.hpp"
#include "tangle/solver_simple.hpp"
#include "tangle/swap_list.hpp"
#include "tangle/tangle.hpp"

namespace tangle {

struct BaselineOptions {
  Budget budget;
  bool deduplicate = true;
};

namespace detail {

struct SearchNode {
  std::uint64_t remaining;  // mixed-radix rank of the remaining sublist
  PackedPerm perm;
  std::uint32_t parent;
};

struct StateHash {
  std::size_t operator()(const std::pair<std::uint64_t, PackedPerm>& s) const {
    std::uint64_t h = s.first * 0x9E3779B97F4A7C15ull ^ (s.second + 0x7F4A7C159E3779B9ull + (s.first << 6));
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
  }
};

}  // namespace detail

inline SolveReport solve_baseline(const SwapList& list, const BaselineOptions& options = {}) {
  const int n = list.order();
  detail::check_solver_order(n);
  detail::BudgetClock clock(options.budget);
  SolveReport report;
  auto finish = [&](Verdict v) {
    report.verdict = v;
    report.elapsed_ms = clock.elapsed_ms();
    return report;
  };

  struct Slot {
    Count cap;
    std::uint64_t stride;
  };
  std::vector<Slot> slots;
  std::vector<int> slot_of(n * n, -1);
  std::uint64_t full = 0;
  {
    std::uint64_t stride = 1;
    for (const auto& [p, c] : list.entries()) {
      slot_of[p.lo * n + p.hi] = static_cast<int>(slots.size());
      slots.push_back({c, stride});
      full += std::uint64_t{c} * stride;
      std::uint64_t radix = std::uint64_t{c} + 1;
      if (stride > std::numeric_limits<std::uint64_t>::max() / radix)
        throw std::invalid_argument("solve_baseline: list has too many sublists to encode");
      stride *= radix;
    }
  }

  std::vector<std::vector<int>> matchings;
  for (auto m : position_matchings(n)) {
    std::vector<int> ps;
    for (int p = 0; p + 1 < n; ++p)
      if (m >> p & 1) ps.push_back(p);
    matchings.push_back(std::move(ps));
  }

  std::vector<detail::SearchNode> nodes;
  std::unordered_set<std::pair<std::uint64_t, detail::PackedPerm>, detail::StateHash> seen;
  const detail::PackedPerm start = detail::pack(Permutation::identity(n).wire_order());
  nodes.push_back({full, start, 0});
  if (options.deduplicate) seen.insert({full, start});
  report.level_sizes.push_back(1);

  auto memory_in_use = [&] {
    return nodes.size() * sizeof(detail::SearchNode) + seen.size() * 40;
  };

  std::int64_t goal = full == 0 ? 0 : -1;
  std::vector<Count> digits(slots.size());
  std::size_t head = 0;
  std::size_t level_end = 1;
  while (goal < 0 && head < nodes.size()) {
    if (head == level_end) {
      report.level_sizes.push_back(nodes.size() - level_end);
      level_end = nodes.size();
    }
    if (clock.tick()) {
      report.states_stored = nodes.size();
      return finish(Verdict::timeout);
    }
    if (clock.over_memory(memory_in_use())) {
      report.states_stored = nodes.size();
      return finish(Verdict::memout);
    }
    if (nodes.size() >= std::numeric_limits<std::uint32_t>::max()) {
      report.states_stored = nodes.size();
      return finish(Verdict::memout);
    }
    const detail::SearchNode node = nodes[head];
    ++report.states_explored;
    {
      std::uint64_t r = node.remaining;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        digits[s] = static_cast<Count>(r % (slots[s].cap + 1));
        r /= slots[s].cap + 1;
      }
    }
    for (const auto& m : matchings) {
      std::uint64_t remaining = node.remaining;
      detail::PackedPerm perm = node.perm;
      bool ok = true;
      for (int p : m) {
        Wire a = detail::packed_wire(node.perm, p);
        Wire b = detail::packed_wire(node.perm, p + 1);
        int s = slot_of[std::min(a, b) * n + std::max(a, b)];
        if (s < 0 || digits[s] == 0) {
          ok = false;
          break;
        }
        remaining -= slots[s].stride;
        perm = detail::packed_swap(perm, p);
      }
      if (!ok) continue;
      if (options.deduplicate && !seen.insert({remaining, perm}).second) continue;
      nodes.push_back({remaining, perm, static_cast<std::uint32_t>(head)});
      if (remaining == 0) {
        goal = static_cast<std::int64_t>(nodes.size() - 1);
        break;
      }
    }
    ++head;
  }
  if (goal >= 0 && static_cast<std::size_t>(goal) >= level_end) report.level_sizes.push_back(nodes.size() - level_end);
  report.states_stored = nodes.size();
  if (goal < 0) return finish(Verdict::infeasible);

  std::vector<Permutation> path;
  for (std::size_t v = static_cast<std::size_t>(goal);; v = nodes[v].parent) {
    path.push_back(detail::unpack(nodes[v].perm, n));
    if (v == 0) break;
  }
  std::reverse(path.begin(), path.end());
  report.tangle.emplace(std::move(path));
  return finish(Verdict::feasible);
}

}  // namespace tangle
