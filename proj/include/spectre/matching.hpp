#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spectre/types.hpp"

namespace spectre {

// Candidate pair set; the same node may appear in many pairs.
struct PairSet {
  std::vector<std::pair<NodeId, NodeId>> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

// Pair set that is injective in both coordinates, with O(1) lookup by side.
class Matching {
 public:
  Matching() = default;
  Matching(NodeId left_count, NodeId right_count)
      : by_left_(left_count, kNoNode), by_right_(right_count, kNoNode) {}

  // Adds (i, j) unless either node is already matched.
  bool try_add(NodeId i, NodeId j) {
    if (by_left_.at(i) != kNoNode || by_right_.at(j) != kNoNode) return false;
    by_left_[i] = j;
    by_right_[j] = i;
    pairs_.emplace_back(i, j);
    return true;
  }

  bool left_matched(NodeId i) const { return by_left_.at(i) != kNoNode; }
  bool right_matched(NodeId j) const { return by_right_.at(j) != kNoNode; }

  // f_M(i), undefined when i is unmatched.
  std::optional<NodeId> image(NodeId i) const {
    const NodeId j = by_left_.at(i);
    if (j == kNoNode) return std::nullopt;
    return j;
  }
  std::optional<NodeId> preimage(NodeId j) const {
    const NodeId i = by_right_.at(j);
    if (i == kNoNode) return std::nullopt;
    return i;
  }

  std::span<const std::pair<NodeId, NodeId>> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  NodeId left_count() const { return static_cast<NodeId>(by_left_.size()); }
  NodeId right_count() const { return static_cast<NodeId>(by_right_.size()); }

  PairSet as_pair_set() const { return PairSet{{pairs_.begin(), pairs_.end()}}; }

 private:
  std::vector<std::pair<NodeId, NodeId>> pairs_;
  std::vector<NodeId> by_left_, by_right_;
};

}  // namespace spectre
