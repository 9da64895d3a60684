#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spectre/types.hpp"

namespace spectre {

// Simple undirected graph: no self-loops, no multi-edges. CSR adjacency with
// each row sorted ascending; immutable after construction, safe to share
// across threads.
class Graph {
 public:
  Graph() = default;

  // Builds the simple graph on node ids [0, node_count). Self-loops are
  // dropped and duplicate edges collapse. Throws InvalidParam on an
  // out-of-range endpoint.
  static Graph from_edges(NodeId node_count,
                          const std::vector<std::pair<NodeId, NodeId>>& edges);

  NodeId node_count() const { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t edge_count() const { return edge_count_; }

  // Sorted neighbor list N_i. Throws InvalidParam if i is out of range.
  std::span<const NodeId> neighbors(NodeId i) const {
    check_node(i);
    return {adj_.data() + offsets_[i], adj_.data() + offsets_[i + 1]};
  }

  NodeId degree(NodeId i) const {
    check_node(i);
    return static_cast<NodeId>(offsets_[i + 1] - offsets_[i]);
  }

  bool has_edge(NodeId i, NodeId j) const;

  // True for graphs with at most one node.
  bool connected() const;

  // Visits each edge once as (i, j) with i < j, ascending.
  template <typename F>
  void for_each_edge(F&& f) const {
    const NodeId n = node_count();
    for (NodeId i = 0; i < n; ++i) {
      for (std::uint64_t k = offsets_[i]; k < offsets_[i + 1]; ++k) {
        const NodeId j = adj_[k];
        if (j > i) f(i, j);
      }
    }
  }

  // CSR storage, for the numeric kernels.
  std::span<const std::uint64_t> row_offsets() const { return offsets_; }
  std::span<const NodeId> adjacency() const { return adj_; }

  // Validation pass for the structural invariants (symmetry, sortedness,
  // no self-loops, edge count). Throws Error on violation.
  void check_invariants() const;

 private:
  void check_node(NodeId i) const {
    if (i >= node_count())
      throw InvalidParam("node id " + std::to_string(i) + " out of range (n=" +
                         std::to_string(node_count()) + ")");
  }

  std::vector<std::uint64_t> offsets_;  // size node_count()+1
  std::vector<NodeId> adj_;             // size 2*edge_count()
  std::size_t edge_count_ = 0;
};

// Bijection between external labels and dense internal ids 0..n-1.
class NodeLabelMap {
 public:
  NodeId add_or_get(const std::string& label);
  std::optional<NodeId> id_of(const std::string& label) const;
  const std::string& label_of(NodeId id) const;
  NodeId size() const { return static_cast<NodeId>(backward_.size()); }

 private:
  std::unordered_map<std::string, NodeId> forward_;
  std::vector<std::string> backward_;
};

// Node set of a maximum-cardinality connected component, sorted ascending.
// Ties broken toward the component containing the smallest node id.
std::vector<NodeId> largest_connected_component(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> to_parent;  // new id -> parent id, ascending
};

// Subgraph on `nodes` (sorted, unique, all within g) with every internal edge.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

// Copy of g with node i renamed perm[i]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const NodeId> perm);

// Lazy view over N_i(g1) x N_j(g2): the product-graph neighborhood of (i,j).
// Never contains (i,j) itself (simple graphs have no self-loops).
class PairNeighborRange {
 public:
  PairNeighborRange(std::span<const NodeId> left, std::span<const NodeId> right)
      : left_(left), right_(right) {}

  class iterator {
   public:
    using value_type = std::pair<NodeId, NodeId>;

    iterator(const PairNeighborRange* r, std::size_t a, std::size_t b)
        : r_(r), a_(a), b_(b) {}
    value_type operator*() const { return {r_->left_[a_], r_->right_[b_]}; }
    iterator& operator++() {
      if (++b_ == r_->right_.size()) {
        b_ = 0;
        ++a_;
      }
      return *this;
    }
    bool operator==(const iterator& o) const { return a_ == o.a_ && b_ == o.b_; }

   private:
    const PairNeighborRange* r_;
    std::size_t a_, b_;
  };

  iterator begin() const {
    return right_.empty() ? end() : iterator(this, 0, 0);
  }
  iterator end() const { return {this, left_.size(), 0}; }
  std::size_t size() const { return left_.size() * right_.size(); }

 private:
  std::span<const NodeId> left_, right_;
};

PairNeighborRange pair_neighbors(const Graph& g1, const Graph& g2, NodeId i,
                                 NodeId j);

}  // namespace spectre
