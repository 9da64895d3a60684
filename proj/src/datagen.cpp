#include "spectre/datagen.hpp"

#include <algorithm>
#include <numeric>

#include <absl/container/flat_hash_set.h>

namespace spectre {

Graph subsample_edges(const Graph& g, double dropout, Rng& rng) {
  if (dropout < 0 || dropout > 1)
    throw InvalidParam("subsample_edges: dropout must lie in [0, 1]");
  std::vector<std::pair<NodeId, NodeId>> kept;
  kept.reserve(g.edge_count());
  g.for_each_edge([&](NodeId i, NodeId j) {
    if (!rng.bernoulli(dropout)) kept.emplace_back(i, j);
  });
  return Graph::from_edges(g.node_count(), kept);
}

CommonCore common_core(const Graph& t1, const Graph& t2) {
  if (t1.node_count() != t2.node_count())
    throw InvalidParam("common_core: graphs must share a node universe");

  CommonCore cur;
  cur.g1 = t1;
  cur.g2 = t2;
  cur.nodes.resize(t1.node_count());
  std::iota(cur.nodes.begin(), cur.nodes.end(), NodeId{0});

  while (!(cur.g1.connected() && cur.g2.connected())) {
    const std::vector<NodeId> c1 = largest_connected_component(cur.g1);
    const std::vector<NodeId> c2 = largest_connected_component(cur.g2);
    std::vector<NodeId> keep;
    std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                          std::back_inserter(keep));
    if (keep.empty())
      throw Error("common_core: component intersection became empty");

    InducedSubgraph i1 = induced_subgraph(cur.g1, keep);
    InducedSubgraph i2 = induced_subgraph(cur.g2, keep);
    std::vector<NodeId> mapped(keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) mapped[c] = cur.nodes[keep[c]];
    cur.g1 = std::move(i1.graph);
    cur.g2 = std::move(i2.graph);
    cur.nodes = std::move(mapped);
  }
  return cur;
}

CorrelatedPair make_correlated_pair(const Graph& g, double dropout,
                                    std::uint64_t seed,
                                    std::string source_name, int max_retries) {
  if (g.node_count() == 0)
    throw InvalidParam("make_correlated_pair: empty source graph");
  if (!g.connected())
    throw InvalidParam("make_correlated_pair: source graph must be connected");
  if (dropout < 0 || dropout >= 1)
    throw InvalidParam("make_correlated_pair: dropout must lie in [0, 1)");

  Rng rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const Graph t1 = subsample_edges(g, dropout, rng);
    const Graph t2 = subsample_edges(g, dropout, rng);

    CommonCore core;
    try {
      core = common_core(t1, t2);
    } catch (const Error&) {
      continue;
    }
    const auto sim = edge_similarity(core.g1, core.g2);
    if (!sim) continue;  // edgeless core, useless draw

    const NodeId nc = core.g1.node_count();
    std::vector<NodeId> perm(nc);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    rng.shuffle(perm);

    CorrelatedPair out;
    out.g2 = relabel(core.g2, perm);
    out.g1 = std::move(core.g1);
    out.ground_truth = GroundTruth(nc, nc);
    for (NodeId i = 0; i < nc; ++i) out.ground_truth.add(i, perm[i]);
    out.core_to_source = std::move(core.nodes);
    out.dropout = dropout;
    out.seed = seed;
    out.source_name = std::move(source_name);
    out.realized_similarity = *sim;
    return out;
  }
  throw Error("make_correlated_pair: generation failed after " +
              std::to_string(max_retries) + " attempts (dropout too extreme?)");
}

Graph preferential_attachment(NodeId nodes, std::size_t target_edges, Rng& rng) {
  if (nodes < 3) throw InvalidParam("preferential_attachment: need >= 3 nodes");
  const std::size_t max_edges =
      static_cast<std::size_t>(nodes) * (nodes - 1) / 2;
  if (target_edges < nodes || target_edges > max_edges)
    throw InvalidParam("preferential_attachment: infeasible edge target");

  std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {0, 2}, {1, 2}};
  std::vector<NodeId> endpoint_pool{0, 1, 0, 2, 1, 2};
  absl::flat_hash_set<PairKey> present{pair_key(0, 1), pair_key(0, 2),
                                       pair_key(1, 2)};
  const auto norm_key = [](NodeId a, NodeId b) {
    return a < b ? pair_key(a, b) : pair_key(b, a);
  };

  const std::size_t grow_nodes = nodes - 3;
  const std::size_t grow_edges = target_edges - 3;
  const std::size_t base = grow_nodes ? grow_edges / grow_nodes : 0;
  const std::size_t extra = grow_nodes ? grow_edges % grow_nodes : 0;

  for (NodeId v = 3; v < nodes; ++v) {
    std::size_t want = base + ((v - 3) < extra ? 1 : 0);
    want = std::min<std::size_t>(want, v);  // cannot exceed existing nodes
    std::size_t attached = 0;
    while (attached < want) {
      const NodeId t = endpoint_pool[rng.below(endpoint_pool.size())];
      if (t == v || present.contains(norm_key(v, t))) continue;
      present.insert(norm_key(v, t));
      edges.emplace_back(v, t);
      attached++;
    }
    for (std::size_t e = edges.size() - attached; e < edges.size(); ++e) {
      endpoint_pool.push_back(edges[e].first);
      endpoint_pool.push_back(edges[e].second);
    }
  }

  // Early nodes may have been clamped; top up with preferential endpoints.
  while (edges.size() < target_edges) {
    const NodeId a = endpoint_pool[rng.below(endpoint_pool.size())];
    const NodeId b = endpoint_pool[rng.below(endpoint_pool.size())];
    if (a == b || present.contains(norm_key(a, b))) continue;
    present.insert(norm_key(a, b));
    edges.emplace_back(a, b);
    endpoint_pool.push_back(a);
    endpoint_pool.push_back(b);
  }

  Graph g = Graph::from_edges(nodes, edges);
  return g;
}

}  // namespace spectre
