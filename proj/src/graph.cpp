#include "spectre/graph.hpp"

#include <algorithm>

namespace spectre {

Graph Graph::from_edges(NodeId node_count,
                        const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<std::vector<NodeId>> adj(node_count);
  for (const auto& [a, b] : edges) {
    if (a >= node_count || b >= node_count)
      throw InvalidParam("edge endpoint out of range");
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  std::size_t total = 0;
  for (NodeId i = 0; i < node_count; ++i) {
    auto& row = adj[i];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    total += row.size();
  }
  g.adj_.reserve(total);
  for (NodeId i = 0; i < node_count; ++i) {
    g.adj_.insert(g.adj_.end(), adj[i].begin(), adj[i].end());
    g.offsets_[i + 1] = g.adj_.size();
  }
  g.edge_count_ = total / 2;
  return g;
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  auto row = neighbors(i);
  check_node(j);
  return std::binary_search(row.begin(), row.end(), j);
}

bool Graph::connected() const {
  const NodeId n = node_count();
  if (n <= 1) return true;
  std::vector<NodeId> stack{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  NodeId reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

void Graph::check_invariants() const {
  const NodeId n = node_count();
  std::size_t total = 0;
  for (NodeId i = 0; i < n; ++i) {
    auto row = neighbors(i);
    total += row.size();
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] == i) throw Error("invariant violated: self-loop at node " + std::to_string(i));
      if (k > 0 && row[k] <= row[k - 1])
        throw Error("invariant violated: adjacency not strictly sorted at node " + std::to_string(i));
      if (!has_edge(row[k], i))
        throw Error("invariant violated: asymmetric edge " + std::to_string(i) + "-" + std::to_string(row[k]));
    }
  }
  if (total != 2 * edge_count_)
    throw Error("invariant violated: edge count mismatch");
}

NodeId NodeLabelMap::add_or_get(const std::string& label) {
  auto [it, inserted] = forward_.try_emplace(label, static_cast<NodeId>(backward_.size()));
  if (inserted) backward_.push_back(label);
  return it->second;
}

std::optional<NodeId> NodeLabelMap::id_of(const std::string& label) const {
  auto it = forward_.find(label);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

const std::string& NodeLabelMap::label_of(NodeId id) const {
  if (id >= backward_.size()) throw InvalidParam("label id out of range");
  return backward_[id];
}

std::vector<NodeId> largest_connected_component(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<NodeId> best;
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack, comp;
  // Seeds are visited in ascending id order, so the first component reaching
  // the maximum size is the one containing the smallest node id.
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    comp.clear();
    stack.assign(1, s);
    seen[s] = true;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    if (comp.size() > best.size()) best = comp;
  }
  std::sort(best.begin(), best.end());
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  const NodeId n = g.node_count();
  std::vector<NodeId> to_child(n, kNoNode);
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    const NodeId p = nodes[c];
    if (p >= n) throw InvalidParam("induced_subgraph: node outside graph");
    if (to_child[p] != kNoNode)
      throw InvalidParam("induced_subgraph: duplicate node in set");
    to_child[p] = static_cast<NodeId>(c);
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    for (NodeId v : g.neighbors(nodes[c])) {
      if (v > nodes[c] && to_child[v] != kNoNode)
        edges.emplace_back(static_cast<NodeId>(c), to_child[v]);
    }
  }

  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<NodeId>(nodes.size()), edges);
  out.to_parent.assign(nodes.begin(), nodes.end());
  return out;
}

Graph relabel(const Graph& g, std::span<const NodeId> perm) {
  const NodeId n = g.node_count();
  if (perm.size() != n) throw InvalidParam("relabel: permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (NodeId p : perm) {
    if (p >= n || hit[p]) throw InvalidParam("relabel: not a permutation");
    hit[p] = true;
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edge_count());
  g.for_each_edge([&](NodeId i, NodeId j) { edges.emplace_back(perm[i], perm[j]); });
  return Graph::from_edges(n, edges);
}

PairNeighborRange pair_neighbors(const Graph& g1, const Graph& g2, NodeId i,
                                 NodeId j) {
  return {g1.neighbors(i), g2.neighbors(j)};
}

}  // namespace spectre
