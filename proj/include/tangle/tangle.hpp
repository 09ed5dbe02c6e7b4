#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangle/permutation.hpp"
#include "tangle/swap_list.hpp"

namespace tangle {

/// A sequence of permutations in which consecutive ones are adjacent.
/// Height is the number of permutations; there are height - 1 layers.
class Tangle {
 public:
  explicit Tangle(std::vector<Permutation> perms) : perms_(std::move(perms)) {
    if (perms_.empty()) throw std::invalid_argument("tangle needs at least one permutation");
    const int n = perms_.front().size();
    layers_.reserve(perms_.size() - 1);
    for (std::size_t t = 0; t + 1 < perms_.size(); ++t) {
      if (perms_[t + 1].size() != n) throw std::invalid_argument("tangle permutations differ in order");
      auto eps = is_adjacent(perms_[t], perms_[t + 1]);
      if (!eps)
        throw std::invalid_argument("tangle permutations " + std::to_string(t + 1) + " and " +
                                    std::to_string(t + 2) + " are not adjacent");
      layers_.push_back(std::move(*eps));
    }
  }

  /// Builds the tangle that starts at `start` and applies `layers` in turn.
  static Tangle from_layers(const Permutation& start, const std::vector<Involution>& layers) {
    std::vector<Permutation> perms{start};
    for (const auto& eps : layers) {
      if (!supports(perms.back(), eps)) throw std::invalid_argument("layer not supported by permutation");
      perms.push_back(compose(perms.back(), eps));
    }
    return Tangle(std::move(perms));
  }

  int order() const { return perms_.front().size(); }
  int height() const { return static_cast<int>(perms_.size()); }
  const std::vector<Permutation>& permutations() const { return perms_; }
  const Permutation& front() const { return perms_.front(); }
  const Permutation& back() const { return perms_.back(); }
  /// Layer t is S(pi_t^-1 pi_{t+1}).
  const std::vector<Involution>& layers() const { return layers_; }

  /// All permutations distinct.
  bool is_simple() const {
    std::set<Permutation> seen(perms_.begin(), perms_.end());
    return seen.size() == perms_.size();
  }

  bool operator==(const Tangle& other) const { return perms_ == other.perms_; }

 private:
  std::vector<Permutation> perms_;
  std::vector<Involution> layers_;
};

/// L(T): how often each pair swaps across the layers of T.
inline SwapList list_of_tangle(const Tangle& t) {
  SwapList out(t.order());
  for (const auto& layer : t.layers())
    for (const auto& s : layer.swaps()) out.add(s.lo, s.hi, 1);
  return out;
}

/// Stacks tangles over disjoint contiguous position ranges side by side.
/// Each part covers `wires` (original indices, which must occupy exactly
/// the positions they list in the identity start). Layer t of the result
/// is the union of layer t of every part that still has one.
struct TanglePart {
  Tangle tangle;
  std::vector<Wire> wires;
};

inline Tangle merge_side_by_side(int n, const std::vector<TanglePart>& parts) {
  int height = 1;
  for (const auto& part : parts) height = std::max(height, part.tangle.height());
  std::vector<Involution> layers;
  for (int t = 0; t + 1 < height; ++t) {
    std::vector<WirePair> swaps;
    for (const auto& part : parts) {
      if (t >= part.tangle.height() - 1) continue;
      for (const auto& s : part.tangle.layers()[t].swaps())
        swaps.emplace_back(part.wires[s.lo], part.wires[s.hi]);
    }
    layers.push_back(Involution::from_pairs(n, std::move(swaps)));
  }
  return Tangle::from_layers(Permutation::identity(n), layers);
}

}  // namespace tangle
