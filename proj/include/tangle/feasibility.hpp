#pragma once

// Feasibility characterizations for structured lists.
//
//  * simple lists are feasible exactly when consistent;
//  * odd lists (every non-zero entry odd) likewise, with eight equivalent
//    formulations checked by check_odd_list_equivalences;
//  * even lists are always consistent; non-separability is necessary and
//    conjectured sufficient. Verdicts that rely on the conjecture say so.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "tangle/permutation.hpp"
#include "tangle/solver_general.hpp"
#include "tangle/swap_list.hpp"
#include "tangle/tangle.hpp"

namespace tangle {

enum class FeasibilityMethod { simple_consistency, odd_consistency, conjecture, solver, exhausted };

inline std::string_view to_string(FeasibilityMethod m) {
  switch (m) {
    case FeasibilityMethod::simple_consistency: return "simple-consistency";
    case FeasibilityMethod::odd_consistency: return "odd-consistency";
    case FeasibilityMethod::conjecture: return "conjecture";
    case FeasibilityMethod::solver: return "solver";
    case FeasibilityMethod::exhausted: return "exhausted";
  }
  return "unknown";
}

/// `exhausted` means the solver ran out of budget; `feasible` is then false
/// but carries no information.
struct FeasibilityVerdict {
  bool feasible = false;
  FeasibilityMethod method = FeasibilityMethod::solver;
  std::optional<Tangle> witness;
};

/// Odd-even transposition sort from pi towards sigma: rounds alternate
/// between even and odd position pairs and swap a pair exactly when its
/// wires are out of order relative to sigma. At most n rounds, each pair
/// swaps at most once, so the result has height <= n + 1 and a simple list.
inline Tangle connect_wang(const Permutation& pi, const Permutation& sigma) {
  const int n = pi.size();
  if (sigma.size() != n) throw std::invalid_argument("connect_wang: order mismatch");
  std::vector<Permutation> perms{pi};
  Permutation current = pi;
  for (int round = 0; round < n && current != sigma; ++round) {
    bool moved = false;
    for (int p = round % 2; p + 1 < n; p += 2) {
      if (sigma.position_of(current.wire_at(p)) > sigma.position_of(current.wire_at(p + 1))) {
        current.swap_positions(p);
        moved = true;
      }
    }
    if (moved) perms.push_back(current);
  }
  return Tangle(std::move(perms));
}

inline FeasibilityVerdict feasible_simple(const SwapList& list, bool with_witness = false) {
  if (!list.is_simple()) throw std::invalid_argument("feasible_simple requires a simple list");
  FeasibilityVerdict v;
  v.method = FeasibilityMethod::simple_consistency;
  v.feasible = is_consistent(list);
  if (v.feasible && with_witness)
    v.witness = connect_wang(Permutation::identity(list.order()), final_permutation(list));
  return v;
}

inline FeasibilityVerdict feasible_odd(const SwapList& list) {
  if (!list.is_odd()) throw std::invalid_argument("feasible_odd requires an odd list");
  FeasibilityVerdict v;
  v.method = FeasibilityMethod::odd_consistency;
  v.feasible = is_consistent(list);
  return v;
}

/// The eight equivalent statements for an odd list with n >= 3:
///   1 L feasible            2 1(L) feasible
///   3 every L_A feasible    4 every 1(L_A) feasible      (A ranges over triples)
///   5 L consistent          6 1(L) consistent
///   7 every L_A consistent  8 every 1(L_A) consistent
struct OddListStatements {
  std::array<bool, 8> holds{};

  bool all_agree() const {
    return std::all_of(holds.begin(), holds.end(), [&](bool b) { return b == holds[0]; });
  }
};

inline OddListStatements check_odd_list_equivalences(const SwapList& list, const Budget& budget = {}) {
  if (!list.is_odd()) throw std::invalid_argument("odd-list equivalences require an odd list");
  const int n = list.order();
  if (n < 3) throw std::invalid_argument("odd-list equivalences require n >= 3");
  OddListStatements out;
  const SwapList reduced = parity_reduce(list);
  out.holds[0] = is_feasible(list, budget);
  out.holds[1] = is_feasible(reduced, budget);
  out.holds[4] = is_consistent(list);
  out.holds[5] = is_consistent(reduced);
  out.holds[2] = out.holds[3] = out.holds[6] = out.holds[7] = true;
  for (Wire a = 0; a < n; ++a)
    for (Wire b = a + 1; b < n; ++b)
      for (Wire c = b + 1; c < n; ++c) {
        SwapList triple = restrict(list, {a, b, c});
        SwapList triple_reduced = parity_reduce(triple);
        out.holds[2] = out.holds[2] && is_feasible(triple, budget);
        out.holds[3] = out.holds[3] && is_feasible(triple_reduced, budget);
        out.holds[6] = out.holds[6] && is_consistent(triple);
        out.holds[7] = out.holds[7] && is_consistent(triple_reduced);
      }
  return out;
}

/// Conjectured verdict (non-separability) unless `decisive`, in which case
/// the sublist solver decides.
inline FeasibilityVerdict feasible_even_conjectured(const SwapList& list, bool decisive = false,
                                                    const Budget& budget = {}) {
  if (!list.is_even()) throw std::invalid_argument("feasible_even_conjectured requires an even list");
  FeasibilityVerdict v;
  if (!decisive) {
    v.method = FeasibilityMethod::conjecture;
    v.feasible = is_non_separable(list);
    return v;
  }
  GeneralOptions options;
  options.budget = budget;
  auto report = solve_general(list, options);
  v.method = report.decided() ? FeasibilityMethod::solver : FeasibilityMethod::exhausted;
  v.feasible = report.feasible();
  v.witness = std::move(report.tangle);
  return v;
}

struct ConjectureReport {
  int n = 0;
  Count entry_bound = 0;
  std::uint64_t lists_enumerated = 0;
  std::uint64_t non_separable = 0;
  std::uint64_t confirmed_feasible = 0;
  std::uint64_t undecided = 0;
  std::vector<SwapList> counterexamples;
};

namespace detail {

/// The index-th even list of order n with entries in {0, 2, ..., bound},
/// pairs in (lo, hi) order as least significant digit first.
inline SwapList even_list_at(int n, Count bound, std::uint64_t index) {
  const std::uint64_t radix = bound / 2 + 1;
  SwapList out(n);
  for (Wire i = 0; i < n; ++i)
    for (Wire j = i + 1; j < n; ++j) {
      out.set(i, j, static_cast<Count>(index % radix) * 2);
      index /= radix;
    }
  return out;
}

}  // namespace detail

/// Exhaustively checks that every non-separable even list of order n with
/// entries at most `entry_bound` is feasible. Work is split across
/// `workers` threads by index stride; the report is independent of the
/// worker count.
inline ConjectureReport verify_conjecture(int n, Count entry_bound, int workers = 1, const Budget& per_list = {}) {
  if (n < 3) throw std::invalid_argument("verify_conjecture requires n >= 3");
  if (entry_bound % 2 != 0) throw std::invalid_argument("entry bound must be even");
  const std::uint64_t radix = entry_bound / 2 + 1;
  const int pairs = n * (n - 1) / 2;
  std::uint64_t total = 1;
  for (int k = 0; k < pairs; ++k) {
    if (total > std::numeric_limits<std::uint64_t>::max() / radix)
      throw std::invalid_argument("verify_conjecture: enumeration too large");
    total *= radix;
  }
  workers = std::max(1, workers);

  struct Shard {
    std::uint64_t non_separable = 0, feasible = 0, undecided = 0;
    std::vector<std::pair<std::uint64_t, SwapList>> counterexamples;
  };
  std::vector<Shard> shards(workers);
  auto run = [&](int w) {
    Shard& shard = shards[w];
    for (std::uint64_t idx = w; idx < total; idx += workers) {
      SwapList list = detail::even_list_at(n, entry_bound, idx);
      if (!is_non_separable(list)) continue;
      ++shard.non_separable;
      GeneralOptions options;
      options.budget = per_list;
      options.reconstruct = false;
      auto report = solve_general(list, options);
      if (!report.decided())
        ++shard.undecided;
      else if (report.feasible())
        ++shard.feasible;
      else
        shard.counterexamples.emplace_back(idx, std::move(list));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  ConjectureReport report;
  report.n = n;
  report.entry_bound = entry_bound;
  report.lists_enumerated = total;
  std::vector<std::pair<std::uint64_t, SwapList>> found;
  for (auto& s : shards) {
    report.non_separable += s.non_separable;
    report.confirmed_feasible += s.feasible;
    report.undecided += s.undecided;
    for (auto& c : s.counterexamples) found.push_back(std::move(c));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& c : found) report.counterexamples.push_back(std::move(c.second));
  return report;
}

/// Checks the rich-even-list statement on one instance: L even,
/// non-separable, every non-zero entry at least n, hence feasible.
inline bool check_rich_even_instance(const SwapList& list, const Budget& budget = {}) {
  if (!list.is_even() || !is_non_separable(list))
    throw std::invalid_argument("rich even list must be even and non-separable");
  for (const auto& [p, c] : list.entries())
    if (c < static_cast<Count>(list.order())) throw std::invalid_argument("rich even list entries must be 0 or >= n");
  return is_feasible(list, budget);
}

/// Removes swaps two at a time (never zeroing an entry) while the list
/// stays feasible. Pairs are tried in canonical order and the scan restarts
/// after every successful removal.
inline SwapList minimize_even_list(const SwapList& list, const Budget& budget = {}) {
  if (!list.is_even()) throw std::invalid_argument("minimize_even_list requires an even list");
  if (!is_feasible(list, budget)) throw std::invalid_argument("minimize_even_list requires a feasible list");
  SwapList current = list;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [p, c] : current.entries()) {
      if (c < 4) continue;
      SwapList candidate = current;
      candidate.set(p.lo, p.hi, c - 2);
      if (is_feasible(candidate, budget)) {
        current = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
  return current;
}

}  // namespace tangle
