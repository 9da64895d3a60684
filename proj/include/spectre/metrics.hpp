#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spectre/graph.hpp"
#include "spectre/matching.hpp"

namespace spectre {

// Bijective partial correspondence between G1 and G2 node ids.
class GroundTruth {
 public:
  GroundTruth() = default;
  GroundTruth(NodeId left_count, NodeId right_count)
      : by_left_(left_count, kNoNode), by_right_(right_count, kNoNode) {}

  // Throws InvalidParam if either node already appears.
  void add(NodeId i, NodeId j) {
    if (by_left_.at(i) != kNoNode || by_right_.at(j) != kNoNode)
      throw InvalidParam("GroundTruth::add: node already mapped");
    by_left_[i] = j;
    by_right_[j] = i;
    pairs_.emplace_back(i, j);
  }

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

 private:
  std::vector<std::pair<NodeId, NodeId>> pairs_;
  std::vector<NodeId> by_left_, by_right_;
};

// Undefined metrics (zero denominator) stay std::nullopt; they are never
// coerced to 0.
struct MetricReport {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> edge_correctness;
  std::optional<double> ics;
  std::optional<double> sim_e;  // set only when a shared identification exists

  std::size_t matching_size = 0;
  std::uint64_t correct_pairs = 0;       // numerator of precision and recall
  std::uint64_t recall_denominator = 0;  // gt nodes with degree >= 2 in both
  std::uint64_t conserved_edges = 0;     // numerator of EC and ICS
  std::uint64_t edges_g1 = 0;            // EC denominator
  std::uint64_t ics_denominator = 0;     // G2 edges induced by matched image
};

// Prec = |{(i,j) in M : i <-> j}| / |M|
std::optional<double> precision(const Matching& m, const GroundTruth& gt);

// Recall = correct pairs / |{gt pairs (i,j) : d1(i) >= 2 and d2(j) >= 2}|
std::optional<double> recall(const Matching& m, const GroundTruth& gt,
                             const Graph& g1, const Graph& g2);

// EC = |M(E1) cap E2| / |E1|
std::optional<double> edge_correctness(const Graph& g1, const Graph& g2,
                                       const Matching& m);

// ICS = |M(E1) cap E2| / |{(i,j) in E2 : i,j in M(V1)}|
std::optional<double> ics_score(const Graph& g1, const Graph& g2,
                                const Matching& m);

// Sim_e = 2 |E1 cap E2| / (|E1| + |E2|) over a shared node universe.
std::optional<double> edge_similarity(const Graph& g1, const Graph& g2);
// Same, with the node identification given by a ground-truth map.
std::optional<double> edge_similarity(const Graph& g1, const Graph& g2,
                                      const GroundTruth& gt);

// All of the above in one report; gt may be null (topology-only metrics).
MetricReport evaluate_matching(const Graph& g1, const Graph& g2,
                               const Matching& m, const GroundTruth* gt);

}  // namespace spectre
