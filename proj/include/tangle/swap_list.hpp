#pragma once

// Swap lists: symmetric multiplicity matrices with zero diagonal, stored as
// the sparse upper triangle. Wires are 0-based throughout the library; the
// file formats and the CLI are 1-based.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tangle {

using Wire = int;
using Count = std::uint32_t;

/// Unordered wire pair, normalized so that lo < hi.
struct WirePair {
  Wire lo = 0;
  Wire hi = 0;

  WirePair() = default;
  WirePair(Wire a, Wire b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  auto operator<=>(const WirePair&) const = default;
};

/// Multiset of swaps over n wires; the matrix L = (l_ij).
class SwapList {
 public:
  SwapList() : SwapList(1) {}

  explicit SwapList(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("swap list needs at least one wire");
  }

  /// One swap per listed pair (repeated pairs accumulate).
  SwapList(int n, std::initializer_list<std::pair<Wire, Wire>> swaps) : SwapList(n) {
    for (auto [a, b] : swaps) add(a, b, 1);
  }

  int order() const { return n_; }

  Count at(Wire i, Wire j) const {
    if (i == j) return 0;
    check_wire(i);
    check_wire(j);
    auto it = mult_.find(WirePair(i, j));
    return it == mult_.end() ? 0 : it->second;
  }

  void set(Wire i, Wire j, Count c) {
    if (i == j) throw std::invalid_argument("swap list diagonal must stay zero");
    check_wire(i);
    check_wire(j);
    WirePair key(i, j);
    auto it = mult_.find(key);
    if (it != mult_.end()) {
      length_ -= it->second;
      if (c == 0) {
        mult_.erase(it);
      } else {
        it->second = c;
        length_ += c;
      }
    } else if (c != 0) {
      mult_.emplace(key, c);
      length_ += c;
    }
  }

  void add(Wire i, Wire j, Count c) { set(i, j, at(i, j) + c); }

  /// |L| = sum over i<j of l_ij.
  std::uint64_t length() const { return length_; }

  bool empty() const { return mult_.empty(); }

  /// Non-zero entries in canonical (lo, hi) order.
  const std::map<WirePair, Count>& entries() const { return mult_; }

  bool is_simple() const {
    for (const auto& [p, c] : mult_)
      if (c != 1) return false;
    return true;
  }
  bool is_even() const {
    for (const auto& [p, c] : mult_)
      if (c % 2 != 0) return false;
    return true;
  }
  bool is_odd() const {
    for (const auto& [p, c] : mult_)
      if (c % 2 == 0) return false;
    return true;
  }
  /// All entries are 0 or 2.
  bool is_zero_two() const {
    for (const auto& [p, c] : mult_)
      if (c != 2) return false;
    return true;
  }

  /// Componentwise l'_ij <= l_ij.
  bool is_sublist_of(const SwapList& other) const {
    if (other.n_ != n_) return false;
    for (const auto& [p, c] : mult_)
      if (other.at(p.lo, p.hi) < c) return false;
    return true;
  }

  /// Wire k takes part in no swap.
  bool is_free(Wire k) const {
    for (const auto& [p, c] : mult_)
      if (p.lo == k || p.hi == k) return false;
    return true;
  }

  bool operator==(const SwapList& other) const = default;

 private:
  void check_wire(Wire w) const {
    if (w < 0 || w >= n_) throw std::out_of_range("wire index out of range");
  }

  int n_;
  std::map<WirePair, Count> mult_;
  std::uint64_t length_ = 0;
};

inline std::uint64_t length(const SwapList& list) { return list.length(); }

/// 1(L): entrywise mod 2.
inline SwapList parity_reduce(const SwapList& list) {
  SwapList out(list.order());
  for (const auto& [p, c] : list.entries())
    if (c % 2 == 1) out.set(p.lo, p.hi, 1);
  return out;
}

/// 2(L): 0 stays 0, odd becomes 1, positive even becomes 2.
inline SwapList cap_reduce(const SwapList& list) {
  SwapList out(list.order());
  for (const auto& [p, c] : list.entries()) out.set(p.lo, p.hi, c % 2 == 1 ? 1 : 2);
  return out;
}

/// Every entry multiplied by `factor`.
inline SwapList scaled(const SwapList& list, Count factor) {
  SwapList out(list.order());
  for (const auto& [p, c] : list.entries()) out.set(p.lo, p.hi, c * factor);
  return out;
}

/// For all i < k < j: l_ik = l_kj = 0 implies l_ij = 0.
inline bool is_non_separable(const SwapList& list) {
  for (const auto& [p, c] : list.entries()) {
    for (Wire k = p.lo + 1; k < p.hi; ++k)
      if (list.at(p.lo, k) == 0 && list.at(k, p.hi) == 0) return false;
  }
  return true;
}

/// L_A: swaps with both wires in `wires`, renumbered by rank in `wires`.
/// `wires` must be strictly increasing.
inline SwapList restrict(const SwapList& list, const std::vector<Wire>& wires) {
  if (wires.empty()) throw std::invalid_argument("restrict needs a non-empty wire set");
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] < 0 || wires[i] >= list.order())
      throw std::out_of_range("restrict: wire index out of range");
    if (i > 0 && wires[i] <= wires[i - 1])
      throw std::invalid_argument("restrict: wire set must be strictly increasing");
  }
  SwapList out(static_cast<int>(wires.size()));
  for (std::size_t a = 0; a < wires.size(); ++a)
    for (std::size_t b = a + 1; b < wires.size(); ++b)
      out.set(static_cast<Wire>(a), static_cast<Wire>(b), list.at(wires[a], wires[b]));
  return out;
}

/// An independent piece of a list produced by split_free_wires.
struct ListBlock {
  SwapList list;
  std::vector<Wire> wires;  // original index of each local wire
};

struct SplitResult {
  bool feasible = true;
  std::vector<ListBlock> blocks;
};

/// Cuts the wire range wherever no swap straddles a boundary. A free wire
/// straddled by some swap makes the list infeasible: it can never move, so
/// the straddling pair can never become adjacent.
inline SplitResult split_free_wires(const SwapList& list) {
  const int n = list.order();
  // straddled_gap[k]: some swap ij has i <= k < j
  std::vector<int> cover(n + 1, 0);
  for (const auto& [p, c] : list.entries()) {
    cover[p.lo] += 1;
    cover[p.hi] -= 1;
  }
  std::vector<bool> straddled_gap(n, false);
  int running = 0;
  for (Wire k = 0; k < n; ++k) {
    running += cover[k];
    straddled_gap[k] = running > 0;
  }

  SplitResult result;
  for (Wire k = 0; k < n; ++k) {
    if (!list.is_free(k)) continue;
    // k is free, so any swap covering the gap before k also passes over k.
    if (k > 0 && straddled_gap[k - 1]) {
      result.feasible = false;
      return result;
    }
  }

  std::vector<Wire> current;
  for (Wire k = 0; k < n; ++k) {
    current.push_back(k);
    if (k == n - 1 || !straddled_gap[k]) {
      result.blocks.push_back({restrict(list, current), current});
      current.clear();
    }
  }
  return result;
}

}  // namespace tangle
