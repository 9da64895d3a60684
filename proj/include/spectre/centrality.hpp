#pragma once

#include <vector>

#include "spectre/graph.hpp"

namespace spectre {

// Eigenvector-centrality scores plus the ranking they induce.
// scores has unit 2-norm, all entries nonnegative (Perron vector); order is
// the node permutation by descending score with ties broken by ascending id;
// rank_of is its inverse (rank_of[order[t]] == t).
struct CentralityRanking {
  std::vector<double> scores;
  std::vector<NodeId> order;
  std::vector<NodeId> rank_of;
  bool converged = true;
  std::size_t iterations = 0;

  // Builds the deterministic ranking from raw scores.
  static CentralityRanking from_scores(std::vector<double> scores,
                                       bool converged = true,
                                       std::size_t iterations = 0);
};

// Power iteration for the Perron vector of A(g). Iterates on A + I (same
// eigenvector, immune to the bipartite +/-lambda stall), starting from the
// uniform positive vector, renormalizing to unit 2-norm each step; stops once
// the successive-iterate infinity-norm difference drops below tol. Hitting
// max_iters first is reported via converged = false, not an error.
// Requires: g connected, at least one node, tol > 0.
CentralityRanking eigenvector_centrality(const Graph& g, double tol = 1e-10,
                                         std::size_t max_iters = 1000);

// First k entries of the rank order. Requires k <= node count.
std::vector<NodeId> top_k(const CentralityRanking& ranking, std::size_t k);

}  // namespace spectre
