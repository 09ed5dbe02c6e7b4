#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tangle/swap_list.hpp"

namespace tangle {

/// A bijection of the wires. Both views are kept: wire_at(p) is the wire at
/// position p (the written form of a permutation), position_of(w) is pi(w).
class Permutation {
 public:
  Permutation() : wire_at_{0}, position_of_{0} {}

  static Permutation identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation needs at least one wire");
    Permutation p;
    p.wire_at_.resize(n);
    p.position_of_.resize(n);
    for (int i = 0; i < n; ++i) p.wire_at_[i] = p.position_of_[i] = i;
    return p;
  }

  /// From the wire-at-position sequence.
  static Permutation from_wire_order(std::vector<Wire> order) {
    const int n = static_cast<int>(order.size());
    if (n < 1) throw std::invalid_argument("permutation needs at least one wire");
    std::vector<int> pos(n, -1);
    for (int p = 0; p < n; ++p) {
      Wire w = order[p];
      if (w < 0 || w >= n || pos[w] != -1)
        throw std::invalid_argument("wire order is not a permutation");
      pos[w] = p;
    }
    Permutation out;
    out.wire_at_ = std::move(order);
    out.position_of_ = std::move(pos);
    return out;
  }

  /// From the position-of-wire map i -> pi(i).
  static Permutation from_positions(const std::vector<int>& positions) {
    const int n = static_cast<int>(positions.size());
    std::vector<Wire> order(n, -1);
    for (Wire w = 0; w < n; ++w) {
      int p = positions[w];
      if (p < 0 || p >= n || order[p] != -1)
        throw std::invalid_argument("position map is not a permutation");
      order[p] = w;
    }
    return from_wire_order(std::move(order));
  }

  int size() const { return static_cast<int>(wire_at_.size()); }
  Wire wire_at(int position) const { return wire_at_[position]; }
  int position_of(Wire w) const { return position_of_[w]; }
  const std::vector<Wire>& wire_order() const { return wire_at_; }
  const std::vector<int>& positions() const { return position_of_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (wire_at_[i] != i) return false;
    return true;
  }

  /// Exchanges the wires at positions p and p + 1.
  void swap_positions(int p) {
    std::swap(wire_at_[p], wire_at_[p + 1]);
    position_of_[wire_at_[p]] = p;
    position_of_[wire_at_[p + 1]] = p + 1;
  }

  bool operator==(const Permutation& other) const { return wire_at_ == other.wire_at_; }
  auto operator<=>(const Permutation& other) const { return wire_at_ <=> other.wire_at_; }

 private:
  std::vector<Wire> wire_at_;
  std::vector<int> position_of_;
};

/// A non-identity product of disjoint swaps; one layer of a tangle.
class Involution {
 public:
  static Involution from_pairs(int n, std::vector<WirePair> swaps) {
    if (swaps.empty()) throw std::invalid_argument("involution must swap at least one pair");
    std::vector<bool> used(n, false);
    for (const auto& s : swaps) {
      if (s.lo < 0 || s.hi >= n || s.lo == s.hi)
        throw std::invalid_argument("involution pair out of range");
      if (used[s.lo] || used[s.hi])
        throw std::invalid_argument("involution pairs must be disjoint");
      used[s.lo] = used[s.hi] = true;
    }
    std::sort(swaps.begin(), swaps.end());
    Involution out;
    out.n_ = n;
    out.swaps_ = std::move(swaps);
    return out;
  }

  int order() const { return n_; }
  /// S(eps), sorted by (lo, hi).
  const std::vector<WirePair>& swaps() const { return swaps_; }

  Wire image(Wire w) const {
    for (const auto& s : swaps_) {
      if (s.lo == w) return s.hi;
      if (s.hi == w) return s.lo;
    }
    return w;
  }

  bool operator==(const Involution&) const = default;

 private:
  int n_ = 0;
  std::vector<WirePair> swaps_;
};

/// F_k with F_1 = F_2 = 1.
inline std::uint64_t fibonacci(int k) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t t = a + b;
    a = b;
    b = t;
  }
  return a;
}

/// All non-empty sets of disjoint neighbouring position pairs (p, p+1) over
/// n positions, as bitmasks with bit p set for each pair. Ordered
/// lexicographically by the sorted list of left positions; this is the
/// canonical involution order used by every solver. There are F_{n+1} - 1.
inline std::vector<std::uint64_t> position_matchings(int n) {
  if (n > 64) throw std::invalid_argument("position_matchings supports at most 64 positions");
  std::vector<std::uint64_t> out;
  auto rec = [&](auto&& self, int start, std::uint64_t mask) -> void {
    for (int p = start; p + 1 < n; ++p) {
      std::uint64_t next = mask | (std::uint64_t{1} << p);
      out.push_back(next);
      self(self, p + 2, next);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// The involution that swaps the wires at the marked positions of pi.
inline Involution involution_at(const Permutation& pi, std::uint64_t matching) {
  std::vector<WirePair> swaps;
  for (int p = 0; p + 1 < pi.size(); ++p)
    if (matching >> p & 1) swaps.emplace_back(pi.wire_at(p), pi.wire_at(p + 1));
  return Involution::from_pairs(pi.size(), std::move(swaps));
}

/// Every involution supported by pi, in canonical order.
inline std::vector<Involution> supported_involutions(const Permutation& pi) {
  std::vector<Involution> out;
  for (auto m : position_matchings(pi.size())) out.push_back(involution_at(pi, m));
  return out;
}

/// pi supports eps when every swapped pair of eps sits at neighbouring positions.
inline bool supports(const Permutation& pi, const Involution& eps) {
  if (eps.order() != pi.size()) return false;
  for (const auto& s : eps.swaps()) {
    int d = pi.position_of(s.lo) - pi.position_of(s.hi);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

/// pi * eps: every swapped pair exchanges positions.
inline Permutation compose(const Permutation& pi, const Involution& eps) {
  std::vector<int> pos = pi.positions();
  for (const auto& s : eps.swaps()) std::swap(pos[s.lo], pos[s.hi]);
  return Permutation::from_positions(pos);
}

/// The involution eps with sigma = pi * eps, if pi supports it.
inline std::optional<Involution> is_adjacent(const Permutation& pi, const Permutation& sigma) {
  const int n = pi.size();
  if (sigma.size() != n) return std::nullopt;
  std::vector<WirePair> swaps;
  for (Wire w = 0; w < n; ++w) {
    Wire image = pi.wire_at(sigma.position_of(w));
    if (image == w) continue;
    if (pi.wire_at(sigma.position_of(image)) != w) return std::nullopt;
    int d = pi.position_of(w) - pi.position_of(image);
    if (d != 1 && d != -1) return std::nullopt;
    if (w < image) swaps.emplace_back(w, image);
  }
  if (swaps.empty()) return std::nullopt;
  return Involution::from_pairs(n, std::move(swaps));
}

/// The map pi L: where each wire ends up after the swaps of L are applied
/// to pi, judged by parity only. May fail to be a bijection.
inline std::vector<int> apply_list(const Permutation& pi, const SwapList& list) {
  if (list.order() != pi.size()) throw std::invalid_argument("apply_list: order mismatch");
  std::vector<int> out = pi.positions();
  for (const auto& [p, c] : list.entries()) {
    if (c % 2 == 0) continue;
    if (pi.position_of(p.lo) < pi.position_of(p.hi)) {
      ++out[p.lo];
      --out[p.hi];
    } else {
      --out[p.lo];
      ++out[p.hi];
    }
  }
  return out;
}

inline bool is_bijection(const std::vector<int>& map) {
  const int n = static_cast<int>(map.size());
  std::vector<bool> hit(n, false);
  for (int v : map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

inline bool is_consistent(const Permutation& pi, const SwapList& list) {
  return is_bijection(apply_list(pi, list));
}

inline bool is_consistent(const SwapList& list) {
  return is_consistent(Permutation::identity(list.order()), list);
}

/// id_n L as a permutation; throws if L is inconsistent.
inline Permutation final_permutation(const SwapList& list) {
  auto map = apply_list(Permutation::identity(list.order()), list);
  if (!is_bijection(map)) throw std::invalid_argument("list is not consistent");
  return Permutation::from_positions(map);
}

/// L(pi): l_ij = 1 exactly for the pairs that pi inverts.
inline SwapList simple_list_of(const Permutation& pi) {
  SwapList out(pi.size());
  for (Wire i = 0; i < pi.size(); ++i)
    for (Wire j = i + 1; j < pi.size(); ++j)
      if (pi.position_of(i) > pi.position_of(j)) out.set(i, j, 1);
  return out;
}

}  // namespace tangle
