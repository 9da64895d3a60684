#include "spectre/metrics.hpp"

namespace spectre {

namespace {

std::uint64_t count_correct(const Matching& m, const GroundTruth& gt) {
  std::uint64_t correct = 0;
  for (const auto& [i, j] : m.pairs()) {
    const auto want = gt.image(i);
    if (want && *want == j) ++correct;
  }
  return correct;
}

std::uint64_t count_conserved(const Graph& g1, const Graph& g2,
                              const Matching& m) {
  std::uint64_t conserved = 0;
  g1.for_each_edge([&](NodeId a, NodeId b) {
    const auto fa = m.image(a);
    const auto fb = m.image(b);
    if (fa && fb && g2.has_edge(*fa, *fb)) ++conserved;
  });
  return conserved;
}

std::optional<double> ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::optional<double> precision(const Matching& m, const GroundTruth& gt) {
  return ratio(count_correct(m, gt), m.size());
}

std::optional<double> recall(const Matching& m, const GroundTruth& gt,
                             const Graph& g1, const Graph& g2) {
  std::uint64_t den = 0;
  for (const auto& [i, j] : gt.pairs())
    if (g1.degree(i) >= 2 && g2.degree(j) >= 2) ++den;
  return ratio(count_correct(m, gt), den);
}

std::optional<double> edge_correctness(const Graph& g1, const Graph& g2,
                                       const Matching& m) {
  return ratio(count_conserved(g1, g2, m), g1.edge_count());
}

std::optional<double> ics_score(const Graph& g1, const Graph& g2,
                                const Matching& m) {
  std::uint64_t induced = 0;
  g2.for_each_edge([&](NodeId u, NodeId v) {
    if (m.right_matched(u) && m.right_matched(v)) ++induced;
  });
  return ratio(count_conserved(g1, g2, m), induced);
}

std::optional<double> edge_similarity(const Graph& g1, const Graph& g2) {
  if (g1.node_count() != g2.node_count())
    throw InvalidParam("edge_similarity: graphs must share a node universe");
  std::uint64_t common = 0;
  g1.for_each_edge([&](NodeId i, NodeId j) {
    if (g2.has_edge(i, j)) ++common;
  });
  return ratio(2 * common, g1.edge_count() + g2.edge_count());
}

std::optional<double> edge_similarity(const Graph& g1, const Graph& g2,
                                      const GroundTruth& gt) {
  std::uint64_t common = 0;
  g1.for_each_edge([&](NodeId i, NodeId j) {
    const auto fi = gt.image(i);
    const auto fj = gt.image(j);
    if (fi && fj && g2.has_edge(*fi, *fj)) ++common;
  });
  return ratio(2 * common, g1.edge_count() + g2.edge_count());
}

MetricReport evaluate_matching(const Graph& g1, const Graph& g2,
                               const Matching& m, const GroundTruth* gt) {
  MetricReport r;
  r.matching_size = m.size();
  r.edges_g1 = g1.edge_count();
  r.conserved_edges = count_conserved(g1, g2, m);
  g2.for_each_edge([&](NodeId u, NodeId v) {
    if (m.right_matched(u) && m.right_matched(v)) ++r.ics_denominator;
  });
  r.edge_correctness = ratio(r.conserved_edges, r.edges_g1);
  r.ics = ratio(r.conserved_edges, r.ics_denominator);

  if (gt) {
    r.correct_pairs = count_correct(m, *gt);
    for (const auto& [i, j] : gt->pairs())
      if (g1.degree(i) >= 2 && g2.degree(j) >= 2) ++r.recall_denominator;
    r.precision = ratio(r.correct_pairs, m.size());
    r.recall = ratio(r.correct_pairs, r.recall_denominator);
    r.sim_e = edge_similarity(g1, g2, *gt);
  }
  return r;
}

}  // namespace spectre
