#pragma once

// Instance families: the many-loops list L_n, the all-ones list E, the
// 3-Partition gadget, and seeded random lists.
//
// Random lists use std::mt19937_64 (its output sequence is fixed by the C++
// standard) and draw bounded integers by rejection on the raw 64-bit output,
// so a seed reproduces the same instance on every platform.

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangle/solver_general.hpp"
#include "tangle/swap_list.hpp"

namespace tangle {

/// Uniform integer in [0, bound) from raw mt19937_64 output.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("draw_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

/// Wires 1..n-2 pairwise swap once; wire i <= n-2 swaps twice with wire n
/// if i is odd and with wire n-1 if i is even (1-based); wires n-1 and n
/// swap n-1 times.
inline SwapList gen_Ln(int n) {
  if (n < 4) throw std::invalid_argument("L_n needs n >= 4");
  SwapList out(n);
  for (Wire i = 0; i < n - 2; ++i)
    for (Wire j = i + 1; j < n - 2; ++j) out.set(i, j, 1);
  for (Wire i = 0; i < n - 2; ++i) {
    // 0-based even index is a 1-based odd wire
    Wire partner = i % 2 == 0 ? n - 1 : n - 2;
    out.set(i, partner, 2);
  }
  out.set(n - 2, n - 1, static_cast<Count>(n - 1));
  return out;
}

/// Every pair swaps once; realizations are pseudo-line arrangements.
inline SwapList gen_E(int n) {
  SwapList out(n);
  for (Wire i = 0; i < n; ++i)
    for (Wire j = i + 1; j < n; ++j) out.set(i, j, 1);
  return out;
}

struct ThreePartitionInstance {
  int m = 0;
  std::vector<std::uint64_t> values;  // 3m positive integers

  std::uint64_t sum() const { return std::accumulate(values.begin(), values.end(), std::uint64_t{0}); }
  std::uint64_t target() const { return m > 0 ? sum() / static_cast<std::uint64_t>(m) : 0; }

  /// Throws unless the instance has 3m positive values summing to a
  /// multiple of m; with `strict`, also requires B/4 < n_i < B/2.
  void validate(bool strict = false) const {
    if (m < 1) throw std::invalid_argument("3-Partition instance needs m >= 1");
    if (values.size() != static_cast<std::size_t>(3 * m))
      throw std::invalid_argument("3-Partition instance needs exactly 3m values");
    for (auto v : values)
      if (v == 0) throw std::invalid_argument("3-Partition values must be positive");
    if (sum() % static_cast<std::uint64_t>(m) != 0)
      throw std::invalid_argument("3-Partition values must sum to a multiple of m");
    if (strict) {
      const std::uint64_t b = target();
      for (auto v : values)
        if (!(4 * v > b && 2 * v < b)) throw std::invalid_argument("3-Partition values must satisfy B/4 < n_i < B/2");
    }
  }
};

/// A yes-instance with target B whose values satisfy B/4 < n_i < B/2:
/// m groups of three values each summing to B, shuffled. Needs B >= 9 so
/// that a valid triple exists.
inline ThreePartitionInstance gen_three_partition(int m, std::uint64_t target, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const std::uint64_t lo = target / 4 + 1;            // smallest value > B/4
  const std::uint64_t hi = (target - 1) / 2;          // largest value < B/2
  if (lo > hi || 3 * lo > target || 3 * hi < target) throw std::invalid_argument("no valid triple for this target");
  std::mt19937_64 rng(seed);
  ThreePartitionInstance inst;
  inst.m = m;
  for (int g = 0; g < m; ++g) {
    while (true) {
      std::uint64_t a = lo + draw_below(rng, hi - lo + 1);
      std::uint64_t b = lo + draw_below(rng, hi - lo + 1);
      if (a + b >= target) continue;
      std::uint64_t c = target - a - b;
      if (c < lo || c > hi) continue;
      inst.values.insert(inst.values.end(), {a, b, c});
      break;
    }
  }
  for (std::size_t i = inst.values.size(); i > 1; --i) std::swap(inst.values[i - 1], inst.values[draw_below(rng, i)]);
  return inst;
}

struct HardnessInstance {
  SwapList list;
  std::uint64_t height_bound = 0;
  /// Role name -> 0-based wire: "omega", "omega'", "alpha_3", "beta'_1", ...
  std::map<std::string, Wire> roles;
};

/// The reduction gadget over 12m + 2 wires. Initial order, left to right:
///   gamma_1..gamma_m, delta_m, beta_m, ..., delta_1, beta_1,
///   alpha_3m..alpha_1, omega, omega', alpha'_1..alpha'_3m,
///   delta'_1, beta'_1, gamma'_1, ..., delta'_m, beta'_m, gamma'_m.
/// Height bound H = 2 m^4 B + 7 m^2.
inline HardnessInstance gen_hardness(const ThreePartitionInstance& inst) {
  inst.validate();
  const std::uint64_t m = static_cast<std::uint64_t>(inst.m);
  const std::uint64_t b = inst.target();
  const int mi = inst.m;

  HardnessInstance out;
  auto& roles = out.roles;
  Wire next = 0;
  auto name = [](const std::string& base, int i) { return base + "_" + std::to_string(i); };
  for (int i = 1; i <= mi; ++i) roles[name("gamma", i)] = next++;
  for (int i = mi; i >= 1; --i) {
    roles[name("delta", i)] = next++;
    roles[name("beta", i)] = next++;
  }
  for (int i = 3 * mi; i >= 1; --i) roles[name("alpha", i)] = next++;
  roles["omega"] = next++;
  roles["omega'"] = next++;
  for (int i = 1; i <= 3 * mi; ++i) roles[name("alpha'", i)] = next++;
  for (int i = 1; i <= mi; ++i) {
    roles[name("delta'", i)] = next++;
    roles[name("beta'", i)] = next++;
    roles[name("gamma'", i)] = next++;
  }

  SwapList list(next);
  auto r = [&](const std::string& role) { return roles.at(role); };
  auto set = [&](const std::string& x, const std::string& y, std::uint64_t c) {
    if (c > std::numeric_limits<Count>::max()) throw std::invalid_argument("gadget multiplicity overflows");
    list.set(r(x), r(y), static_cast<Count>(c));
  };
  const std::uint64_t m3 = m * m * m;

  set("omega", "omega'", 2 * m);
  for (int i = 1; i <= 3 * mi; ++i) {
    set(name("alpha", i), name("alpha'", i), 2 * m3 * inst.values[i - 1]);
    set(name("alpha", i), "omega'", 2);
    set(name("alpha'", i), "omega", 2);
    for (int j = i + 1; j <= 3 * mi; ++j) {
      set(name("alpha", i), name("alpha", j), 2);
      set(name("alpha'", i), name("alpha'", j), 2);
    }
  }

  std::vector<std::string> left, right;
  for (int i = 1; i <= mi; ++i) {
    left.push_back(name("beta", i));
    left.push_back(name("delta", i));
    right.push_back(name("beta'", i));
    right.push_back(name("delta'", i));
  }
  for (std::size_t x = 0; x < left.size(); ++x)
    for (std::size_t y = x + 1; y < left.size(); ++y) {
      set(left[x], left[y], 1);
      set(right[x], right[y], 1);
    }
  for (int i = 1; i <= mi; ++i) {
    set(name("beta", i), "omega", 2);
    set(name("delta", i), "omega'", 2);
    set(name("delta'", i), "omega", 2);
    set(name("beta'", i), "omega'", 2);
    for (int a = 1; a <= 3 * mi; ++a) {
      set(name("beta", i), name("alpha", a), 2);
      set(name("delta", i), name("alpha", a), 2);
      set(name("beta'", i), name("alpha'", a), 2);
      set(name("delta'", i), name("alpha'", a), 2);
    }
  }

  for (int i = 1; i <= mi; ++i) {
    const std::uint64_t iu = static_cast<std::uint64_t>(i);
    set(name("gamma", i), name("beta", i), (m - iu + 1) * 2 * m3 * b);
    set(name("gamma'", i), name("beta'", i), iu * 2 * m3 * b);
    for (int j = 1; j < i; ++j) {
      set(name("gamma", i), name("beta", j), 1);
      set(name("gamma", i), name("delta", j), 1);
    }
    for (int j = i + 1; j <= mi; ++j) {
      set(name("gamma'", i), name("beta'", j), 1);
      set(name("gamma'", i), name("delta'", j), 1);
    }
  }

  out.list = std::move(list);
  out.height_bound = 2 * m * m3 * b + 7 * m * m;
  return out;
}

struct RandomListOptions {
  /// Give up after this many rejected draws.
  int max_rounds = 10000;
  Budget per_check;
};

struct RandomList {
  SwapList list;
  int rounds = 0;  // draws needed, including the accepted one
};

/// `total` swaps spread over the n(n-1)/2 wire pairs by a uniform
/// multinomial draw, redrawn until the list is feasible.
inline RandomList gen_random(int n, std::uint64_t total, std::uint64_t seed, const RandomListOptions& options = {}) {
  if (n < 2) throw std::invalid_argument("random lists need n >= 2");
  if (total < 1) throw std::invalid_argument("random lists need at least one swap");
  std::vector<WirePair> pairs;
  for (Wire i = 0; i < n; ++i)
    for (Wire j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::mt19937_64 rng(seed);
  for (int round = 1; round <= options.max_rounds; ++round) {
    std::vector<Count> counts(pairs.size(), 0);
    for (std::uint64_t t = 0; t < total; ++t) ++counts[draw_below(rng, pairs.size())];
    SwapList list(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) list.set(pairs[k].lo, pairs[k].hi, counts[k]);
    if (is_feasible(list, options.per_check)) return {std::move(list), round};
  }
  throw std::runtime_error("gen_random: no feasible list within " + std::to_string(options.max_rounds) + " draws");
}

}  // namespace tangle
