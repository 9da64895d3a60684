// Independent brute-force oracles and input generators for the test suites.
// Everything here recomputes results from first principles (dense matrices,
// raw edge scans, a library eigendecomposition) so it shares no code path
// with the implementations it checks.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spectre/graph.hpp"
#include "spectre/matching.hpp"
#include "spectre/metrics.hpp"
#include "spectre/rng.hpp"

namespace spectre::testing {

using Edge = std::pair<NodeId, NodeId>;
using EdgeList = std::vector<Edge>;

EdgeList edges_of(const Graph& g);

// --- dense score-propagation oracle ---------------------------------------

class DenseScores {
 public:
  DenseScores(NodeId n1, NodeId n2)
      : n2_(n2), cells_(static_cast<std::size_t>(n1) * n2, 0) {}

  // +1 to N_i(g1) x N_j(g2), straight off the adjacency lists.
  void spread(const Graph& g1, const Graph& g2, NodeId i, NodeId j) {
    for (NodeId u : g1.neighbors(i))
      for (NodeId v : g2.neighbors(j)) ++cells_[std::size_t(u) * n2_ + v];
  }

  std::uint32_t at(NodeId i, NodeId j) const {
    return cells_[std::size_t(i) * n2_ + j];
  }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : cells_) t += c;
    return t;
  }

 private:
  NodeId n2_;
  std::vector<std::uint32_t> cells_;
};

// --- brute-force metrics (raw loops over edge/pair vectors) ----------------

std::optional<double> brute_precision(const std::vector<Edge>& matching,
                                      const std::vector<Edge>& gt);
std::optional<double> brute_recall(const std::vector<Edge>& matching,
                                   const std::vector<Edge>& gt,
                                   const EdgeList& edges1, const EdgeList& edges2);
std::optional<double> brute_edge_correctness(const EdgeList& edges1,
                                             const EdgeList& edges2,
                                             const std::vector<Edge>& matching);
std::optional<double> brute_ics(const EdgeList& edges1, const EdgeList& edges2,
                                const std::vector<Edge>& matching);
std::optional<double> brute_sim_e(const EdgeList& edges1, const EdgeList& edges2);

// --- spectral oracle (Eigen dense eigendecomposition) ----------------------

// Unit-norm nonnegative eigenvector of the largest adjacency eigenvalue.
std::vector<double> dense_perron_vector(const Graph& g);

// --- connectivity oracle ----------------------------------------------------

bool bfs_connected(NodeId n, const EdgeList& edges);

// --- generators -------------------------------------------------------------

Graph random_graph(NodeId n, double edge_prob, Rng& rng);
Graph random_connected_graph(NodeId n, std::size_t extra_edges, Rng& rng);

struct ShuffledCopy {
  Graph graph;
  std::vector<NodeId> perm;  // original id -> new id
};
ShuffledCopy shuffled_copy(const Graph& g, Rng& rng);

// Random connected graph certified rigid (trivial automorphism group):
// automorphisms preserve eigenvector centrality exactly, so pairwise-distinct
// dense-oracle scores certify rigidity. The margin is deliberately wide
// (1e-4) so the instances are also free of near-twin nodes.
Graph rigid_connected_graph(NodeId n, std::size_t extra_edges, Rng& rng);

GroundTruth ground_truth_from_perm(const std::vector<NodeId>& perm);

}  // namespace spectre::testing
