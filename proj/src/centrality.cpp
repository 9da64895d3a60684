#include "spectre/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectre/kernels.hpp"

namespace spectre {

CentralityRanking CentralityRanking::from_scores(std::vector<double> scores,
                                                 bool converged,
                                                 std::size_t iterations) {
  CentralityRanking r;
  r.scores = std::move(scores);
  r.converged = converged;
  r.iterations = iterations;
  const NodeId n = static_cast<NodeId>(r.scores.size());
  r.order.resize(n);
  std::iota(r.order.begin(), r.order.end(), NodeId{0});
  std::sort(r.order.begin(), r.order.end(), [&](NodeId a, NodeId b) {
    if (r.scores[a] != r.scores[b]) return r.scores[a] > r.scores[b];
    return a < b;
  });
  r.rank_of.resize(n);
  for (NodeId t = 0; t < n; ++t) r.rank_of[r.order[t]] = t;
  return r;
}

CentralityRanking eigenvector_centrality(const Graph& g, double tol,
                                         std::size_t max_iters) {
  const NodeId n = g.node_count();
  if (n == 0) throw InvalidParam("eigenvector_centrality: empty graph");
  if (tol <= 0) throw InvalidParam("eigenvector_centrality: tol must be positive");
  if (!g.connected())
    throw InvalidParam(
        "eigenvector_centrality: graph is disconnected; "
        "extract the largest connected component first");

  const std::uint64_t* offsets = g.row_offsets().data();
  const NodeId* cols = g.adjacency().data();

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  bool converged = false;
  std::size_t iters = 0;
  while (iters < max_iters) {
    ++iters;
    kern::spmv_unit(offsets, cols, n, x.data(), y.data());
    kern::add(y.data(), x.data(), n);  // (A + I) x
    const double norm = std::sqrt(kern::dot(y.data(), y.data(), n));
    kern::scale(y.data(), n, 1.0 / norm);
    const double diff = kern::max_abs_diff(y.data(), x.data(), n);
    x.swap(y);
    if (diff < tol) {
      converged = true;
      break;
    }
  }
  return CentralityRanking::from_scores(std::move(x), converged, iters);
}

std::vector<NodeId> top_k(const CentralityRanking& ranking, std::size_t k) {
  if (k > ranking.order.size())
    throw InvalidParam("top_k: k exceeds node count");
  return {ranking.order.begin(), ranking.order.begin() + k};
}

}  // namespace spectre
