#pragma once

// Optimal tangles for arbitrary lists by dynamic programming over sublists.
//
// Every sublist L' of L is visited in order of non-decreasing length. If L'
// is consistent, its optimal tangle ends in id_n L' and the previous
// permutation is id_n L' * eps for some involution eps supported by id_n L'
// whose swaps all occur in L'. So
//
//   h(L') = 1 + min { h(L' - S(eps)) : eps supported by id_n L', S(eps) <= L' }
//
// with h(empty) = 1, where the minimum ranges over feasible L' - S(eps).
// The table is a dense array indexed by the mixed-radix rank of a sublist
// (digit k is the multiplicity of the k-th non-zero pair), so it holds
// exactly lambda = prod (l_ij + 1) cells.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <new>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tangle/permutation.hpp"
#include "tangle/solve_report.hpp"
#include "tangle/solver_simple.hpp"
#include "tangle/swap_list.hpp"
#include "tangle/tangle.hpp"

namespace tangle {

struct GeneralOptions {
  Budget budget;
  /// false: decide feasibility only and skip tangle reconstruction.
  bool reconstruct = true;
  /// Called for each table entry as it is established, with the entry's
  /// length and the length of the predecessor it was derived from (-1 for
  /// the empty list).
  std::function<void(std::uint64_t, std::int64_t)> on_entry;
};

/// lambda: the number of distinct sublists, or nullopt if it overflows 64 bits.
inline std::optional<std::uint64_t> sublist_count(const SwapList& list) {
  std::uint64_t total = 1;
  for (const auto& [p, c] : list.entries()) {
    std::uint64_t radix = std::uint64_t{c} + 1;
    if (total > std::numeric_limits<std::uint64_t>::max() / radix) return std::nullopt;
    total *= radix;
  }
  return total;
}

namespace detail {

/// Hard ceiling on table cells regardless of the memory budget.
inline constexpr std::uint64_t kMaxTableCells = std::uint64_t{1} << 33;

class SublistTable {
 public:
  struct Slot {
    Wire lo;
    Wire hi;
    Count cap;
    std::uint64_t stride;
  };

  SublistTable(const SwapList& list, const GeneralOptions& options, BudgetClock& clock, SolveReport& report)
      : n_(list.order()), options_(options), clock_(clock), report_(report) {
    for (const auto& [p, c] : list.entries()) slots_.push_back({p.lo, p.hi, c, 0});
    slot_of_.assign(n_ * n_, -1);
    for (std::size_t s = 0; s < slots_.size(); ++s) slot_of_[slots_[s].lo * n_ + slots_[s].hi] = static_cast<int>(s);
    suffix_cap_.assign(slots_.size() + 1, 0);
    for (std::size_t s = slots_.size(); s-- > 0;) suffix_cap_[s] = suffix_cap_[s + 1] + slots_[s].cap;
    for (auto m : position_matchings(n_)) {
      std::vector<int> ps;
      for (int p = 0; p + 1 < n_; ++p)
        if (m >> p & 1) ps.push_back(p);
      matchings_.push_back(std::move(ps));
    }
    digit_.assign(slots_.size(), 0);
    pos_.resize(n_);
    order_.resize(n_);
  }

  /// Fills the table. Returns the verdict for the full list.
  Verdict fill() {
    auto lambda = sublist_count_of_slots();
    const std::size_t bytes_per_cell = sizeof(std::uint32_t) + (options_.reconstruct ? sizeof(std::uint16_t) : 0);
    if (!lambda || *lambda > kMaxTableCells || clock_.over_memory(*lambda * bytes_per_cell)) return Verdict::memout;
    try {
      height_.assign(*lambda, 0);
      if (options_.reconstruct) pred_.assign(*lambda, 0);
    } catch (const std::bad_alloc&) {
      return Verdict::memout;
    }
    report_.states_stored += *lambda;
    for (std::size_t s = 0, stride = 1; s < slots_.size(); ++s) {
      slots_[s].stride = stride;
      stride *= slots_[s].cap + 1;
    }

    const std::uint64_t total = suffix_cap_[0];
    for (std::uint64_t k = 0; k <= total && !aborted_; ++k) {
      current_length_ = k;
      for (Wire w = 0; w < n_; ++w) pos_[w] = w;
      visit(0, k, 0);
    }
    if (aborted_) return Verdict::timeout;
    return height_[*lambda - 1] != 0 ? Verdict::feasible : Verdict::infeasible;
  }

  /// Walks predecessors from the full list back to the empty one.
  Tangle reconstruct() const {
    std::vector<Count> digits;
    std::uint64_t rank = 0;
    for (const auto& s : slots_) {
      digits.push_back(s.cap);
      rank += s.cap * s.stride;
    }
    std::vector<Permutation> perms;
    while (true) {
      std::vector<int> pos(n_);
      for (Wire w = 0; w < n_; ++w) pos[w] = w;
      for (std::size_t s = 0; s < slots_.size(); ++s) {
        if (digits[s] % 2 == 1) {
          ++pos[slots_[s].lo];
          --pos[slots_[s].hi];
        }
      }
      perms.push_back(Permutation::from_positions(pos));
      if (rank == 0) break;
      const Permutation& here = perms.back();
      for (int p : matchings_[pred_[rank]]) {
        Wire a = here.wire_at(p), b = here.wire_at(p + 1);
        int s = slot_of_[std::min(a, b) * n_ + std::max(a, b)];
        --digits[s];
        rank -= slots_[s].stride;
      }
    }
    std::reverse(perms.begin(), perms.end());
    return Tangle(std::move(perms));
  }

 private:
  std::optional<std::uint64_t> sublist_count_of_slots() const {
    std::uint64_t total = 1;
    for (const auto& s : slots_) {
      std::uint64_t radix = std::uint64_t{s.cap} + 1;
      if (total > std::numeric_limits<std::uint64_t>::max() / radix) return std::nullopt;
      total *= radix;
    }
    return total;
  }

  void toggle_parity(const Slot& s, bool on) {
    if (on) {
      ++pos_[s.lo];
      --pos_[s.hi];
    } else {
      --pos_[s.lo];
      ++pos_[s.hi];
    }
  }

  // Enumerates all sublists of the current length with digits fixed for
  // slots before `s`.
  void visit(std::size_t s, std::uint64_t remaining, std::uint64_t rank) {
    if (aborted_) return;
    if (s == slots_.size()) {
      evaluate(rank);
      return;
    }
    const Slot& slot = slots_[s];
    const std::uint64_t rest = suffix_cap_[s + 1];
    const std::uint64_t lo = remaining > rest ? remaining - rest : 0;
    const std::uint64_t hi = std::min<std::uint64_t>(slot.cap, remaining);
    bool odd = false;
    for (std::uint64_t d = lo; d <= hi; ++d) {
      bool want = d % 2 == 1;
      if (want != odd) {
        toggle_parity(slot, want);
        odd = want;
      }
      digit_[s] = static_cast<Count>(d);
      visit(s + 1, remaining - d, rank + d * slot.stride);
    }
    if (odd) toggle_parity(slot, false);
    digit_[s] = 0;
  }

  void evaluate(std::uint64_t rank) {
    ++report_.states_explored;
    if (clock_.tick()) {
      aborted_ = true;
      return;
    }
    std::uint32_t seen = 0;
    for (Wire w = 0; w < n_; ++w) {
      if (pos_[w] < 0 || pos_[w] >= n_) return;  // inconsistent: skip
      std::uint32_t bit = std::uint32_t{1} << pos_[w];
      if (seen & bit) return;  // inconsistent: skip
      seen |= bit;
      order_[pos_[w]] = w;
    }
    if (rank == 0) {
      height_[0] = 1;
      if (options_.on_entry) options_.on_entry(0, -1);
      return;
    }
    std::uint32_t best = 0;
    std::uint16_t best_m = 0;
    std::uint64_t best_removed = 0;
    for (std::size_t mi = 0; mi < matchings_.size(); ++mi) {
      std::uint64_t prev = rank;
      bool ok = true;
      for (int p : matchings_[mi]) {
        Wire a = order_[p], b = order_[p + 1];
        int s = slot_of_[std::min(a, b) * n_ + std::max(a, b)];
        if (s < 0 || digit_[s] == 0) {
          ok = false;
          break;
        }
        prev -= slots_[s].stride;
      }
      if (!ok) continue;
      std::uint32_t h = height_[prev];
      if (h != 0 && (best == 0 || h + 1 < best)) {
        best = h + 1;
        best_m = static_cast<std::uint16_t>(mi);
        best_removed = matchings_[mi].size();
      }
    }
    if (best == 0) return;
    height_[rank] = best;
    if (options_.reconstruct) pred_[rank] = best_m;
    if (options_.on_entry)
      options_.on_entry(current_length_, static_cast<std::int64_t>(current_length_ - best_removed));
  }

  int n_;
  const GeneralOptions& options_;
  BudgetClock& clock_;
  SolveReport& report_;
  std::vector<Slot> slots_;
  std::vector<int> slot_of_;
  std::vector<std::uint64_t> suffix_cap_;
  std::vector<std::vector<int>> matchings_;
  std::vector<Count> digit_;
  std::vector<int> pos_;
  std::vector<Wire> order_;
  std::vector<std::uint32_t> height_;
  std::vector<std::uint16_t> pred_;
  std::uint64_t current_length_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

inline SolveReport solve_general(const SwapList& list, const GeneralOptions& options = {}) {
  detail::BudgetClock clock(options.budget);
  SolveReport report;
  auto finish = [&](Verdict v) {
    report.verdict = v;
    report.elapsed_ms = clock.elapsed_ms();
    return report;
  };

  if (!is_consistent(list)) return finish(Verdict::infeasible);
  auto split = split_free_wires(list);
  if (!split.feasible) return finish(Verdict::infeasible);

  std::vector<TanglePart> parts;
  for (const auto& block : split.blocks) {
    if (block.list.empty()) {
      if (options.reconstruct) parts.push_back({Tangle({Permutation::identity(block.list.order())}), block.wires});
      continue;
    }
    detail::check_solver_order(block.list.order());
    detail::SublistTable table(block.list, options, clock, report);
    Verdict v = table.fill();
    if (v != Verdict::feasible) return finish(v);
    if (options.reconstruct) parts.push_back({table.reconstruct(), block.wires});
  }
  if (options.reconstruct) report.tangle = merge_side_by_side(list.order(), parts);
  return finish(Verdict::feasible);
}

inline bool is_feasible(const SwapList& list, const Budget& budget = {}) {
  GeneralOptions options;
  options.budget = budget;
  options.reconstruct = false;
  auto report = solve_general(list, options);
  if (!report.decided()) throw std::runtime_error("feasibility undecided within budget");
  return report.feasible();
}

}  // namespace tangle
