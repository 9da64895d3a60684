#pragma once

#include <string>
#include <vector>

#include "spectre/graph.hpp"
#include "spectre/metrics.hpp"
#include "spectre/rng.hpp"

namespace spectre {

// Same node set; each edge kept independently with probability 1 - dropout.
Graph subsample_edges(const Graph& g, double dropout, Rng& rng);

struct CommonCore {
  Graph g1, g2;
  std::vector<NodeId> nodes;  // surviving source ids, ascending
};

// Iterates {largest connected components; induce both graphs on their
// intersection} until both induced subgraphs are connected. Both inputs must
// share a node universe. Throws Error once the intersection is empty.
CommonCore common_core(const Graph& t1, const Graph& t2);

// Two correlated graphs with known ground truth: independent edge subsamples
// of a connected source graph, reduced to their common core, with g2's labels
// shuffled uniformly at random.
struct CorrelatedPair {
  Graph g1, g2;
  GroundTruth ground_truth;           // g1 id -> g2 id (the shuffle)
  std::vector<NodeId> core_to_source;  // g1 id -> source graph id
  double dropout = 0;
  std::uint64_t seed = 0;
  std::string source_name;
  double realized_similarity = 0;  // Sim_e of the pre-shuffle core
};

// Requires g connected and 0 <= dropout < 1. Degenerate draws (empty
// intersection or an edgeless core) are retried up to max_retries times from
// the same stream; exhaustion raises Error.
CorrelatedPair make_correlated_pair(const Graph& g, double dropout,
                                    std::uint64_t seed,
                                    std::string source_name = {},
                                    int max_retries = 20);

// Connected preferential-attachment graph with exactly target_edges edges
// (heavy-tailed degrees). Used for the bundled benchmark ladder.
// Requires nodes >= 3 and nodes <= target_edges <= nodes*(nodes-1)/2.
Graph preferential_attachment(NodeId nodes, std::size_t target_edges, Rng& rng);

}  // namespace spectre
