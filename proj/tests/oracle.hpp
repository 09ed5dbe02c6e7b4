#pragma once

// Brute-force reference computations for tests. Deliberately shares no code
// with the library: wire orders are plain vectors, lists are dense
// matrices, layers are enumerated by scanning every bitmask.

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;  // symmetric, 0-based

inline Matrix zero_matrix(int n) { return Matrix(n, std::vector<int>(n, 0)); }

/// Bitmasks over n-1 neighbouring position pairs with no two touching pairs.
inline std::vector<std::uint32_t> layers(int n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask)
    if ((mask & (mask >> 1)) == 0) out.push_back(mask);
  return out;
}

/// Minimum tangle height realizing `list` from the identity, or nullopt if
/// no tangle exists. Breadth-first over (wire order, remaining matrix).
inline std::optional<int> min_height(const Matrix& list) {
  const int n = static_cast<int>(list.size());
  using State = std::pair<std::vector<int>, Matrix>;
  std::vector<int> start(n);
  for (int i = 0; i < n; ++i) start[i] = i;
  auto is_zero = [&](const Matrix& m) {
    for (const auto& row : m)
      for (int v : row)
        if (v != 0) return false;
    return true;
  };
  if (is_zero(list)) return 1;
  std::set<State> seen{{start, list}};
  std::queue<std::pair<State, int>> queue;
  queue.push({{start, list}, 0});
  const auto all_layers = layers(n);
  while (!queue.empty()) {
    auto [state, depth] = queue.front();
    queue.pop();
    const auto& [order, rest] = state;
    for (auto mask : all_layers) {
      std::vector<int> next_order = order;
      Matrix next_rest = rest;
      bool ok = true;
      for (int p = 0; p + 1 < n && ok; ++p) {
        if (!(mask >> p & 1)) continue;
        int a = order[p], b = order[p + 1];
        if (next_rest[a][b] == 0) {
          ok = false;
          break;
        }
        --next_rest[a][b];
        --next_rest[b][a];
        std::swap(next_order[p], next_order[p + 1]);
      }
      if (!ok) continue;
      if (is_zero(next_rest)) return depth + 2;
      State s{next_order, next_rest};
      if (seen.insert(s).second) queue.push({s, depth + 1});
    }
  }
  return std::nullopt;
}

/// Applies a sequence of wire swaps to the identity order, one at a time.
/// Returns nullopt if some swapped pair is not adjacent when its turn comes.
inline std::optional<std::vector<int>> apply_swaps(int n, const std::vector<std::pair<int, int>>& swaps) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (auto [a, b] : swaps) {
    bool done = false;
    for (int p = 0; p + 1 < n; ++p) {
      if ((order[p] == a && order[p + 1] == b) || (order[p] == b && order[p + 1] == a)) {
        std::swap(order[p], order[p + 1]);
        done = true;
        break;
      }
    }
    if (!done) return std::nullopt;
  }
  return order;
}

/// Number of sublists by explicit odometer enumeration.
inline std::uint64_t count_sublists(const Matrix& list) {
  std::vector<int> caps;
  const int n = static_cast<int>(list.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) caps.push_back(list[i][j]);
  std::vector<int> digit(caps.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    ++count;
    std::size_t k = 0;
    while (k < caps.size() && digit[k] == caps[k]) digit[k++] = 0;
    if (k == caps.size()) break;
    ++digit[k];
  }
  return count;
}

}  // namespace oracle
