#include "spectre/alignment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <absl/container/flat_hash_set.h>

namespace spectre {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

PairSet estimate_seeds(std::size_t k, std::size_t w, const CentralityRanking& c1,
                       const CentralityRanking& c2) {
  const std::size_t n1 = c1.order.size();
  const std::size_t n2 = c2.order.size();
  const std::size_t n_min = std::min(n1, n2);
  if (k > n_min) throw InvalidParam("estimate_seeds: k exceeds min node count");
  if (k + w > n_min)
    throw InvalidParam("estimate_seeds: k + w exceeds min node count");

  PairSet seeds;
  seeds.pairs.reserve((2 * w + 1) * k);
  for (std::size_t t = 1; t <= k; ++t) {
    const NodeId i = c1.order[t - 1];
    const std::size_t lo = t > w ? t - w : 1;
    const std::size_t hi = std::min(k, t + w);
    for (std::size_t tau = lo; tau <= hi; ++tau)
      seeds.pairs.emplace_back(i, c2.order[tau - 1]);
  }
  return seeds;
}

void spread(ScoreTable& scores, const Graph& g1, const Graph& g2, NodeId i,
            NodeId j) {
  const auto left = g1.neighbors(i);
  const auto right = g2.neighbors(j);
  for (const NodeId u : left)
    for (const NodeId v : right) scores.add_one(pair_key(u, v));
}

Matching safe_expand(const Graph& g1, const Graph& g2, const PairSet& seeds,
                     std::uint32_t threshold, Rng& rng, ExpandTrace* trace) {
  if (threshold < 2) throw InvalidParam("safe_expand: threshold must be >= 2");
  Matching matched(g1.node_count(), g2.node_count());
  if (seeds.empty()) return matched;

  ScoreTable scores;
  for (const auto& [i, j] : seeds.pairs) spread(scores, g1, g2, i, j);

  const auto eligible = [&](PairKey p) {
    return !matched.left_matched(pair_left(p)) &&
           !matched.right_matched(pair_right(p));
  };

  while (auto p = scores.pick_max_uniform(threshold, eligible, rng)) {
    const NodeId i = pair_left(*p);
    const NodeId j = pair_right(*p);
    if (trace) trace->matched_at.emplace_back(*p, scores.score(*p));
    matched.try_add(i, j);
    spread(scores, g1, g2, i, j);
  }
  return matched;
}

Matching loose_expand(const Graph& g1, const Graph& g2, const PairSet& seeds,
                      const CentralityRanking& c1, const CentralityRanking& c2,
                      Rng& rng, ExpandTrace* trace) {
  Matching matched(g1.node_count(), g2.node_count());
  ScoreTable scores;
  absl::flat_hash_set<PairKey> used;

  const auto eligible = [&](PairKey p) {
    return !matched.left_matched(pair_left(p)) &&
           !matched.right_matched(pair_right(p));
  };
  const auto centrality_gap = [&](PairKey p) {
    return std::fabs(c1.scores[pair_left(p)] - c2.scores[pair_right(p)]);
  };

  std::vector<PairKey> working;
  working.reserve(seeds.size());
  for (const auto& [i, j] : seeds.pairs) working.push_back(pair_key(i, j));

  while (!working.empty()) {
    if (trace) trace->spread_rounds.push_back(working);
    for (const PairKey p : working) {
      if (used.insert(p).second)
        spread(scores, g1, g2, pair_left(p), pair_right(p));
    }

    while (auto p = scores.pick_max_min_cost(2, eligible, centrality_gap, rng)) {
      const NodeId i = pair_left(*p);
      const NodeId j = pair_right(*p);
      if (trace) trace->matched_at.emplace_back(*p, scores.score(*p));
      matched.try_add(i, j);
      if (used.insert(*p).second) spread(scores, g1, g2, i, j);
    }

    // Rebuild: unmatched, unused pairs that received a spread. The inner loop
    // just drained everything eligible with score >= 2, so these all sit at
    // score exactly 1. Sorted because the hash table iterates in random order.
    working.clear();
    for (const PairKey p : scores.touched_keys()) {
      if (!used.contains(p) && eligible(p)) working.push_back(p);
    }
    std::sort(working.begin(), working.end());
    if (trace) {
      trace->rebuilt_sets.push_back(working);
      trace->matched_count_at_rebuild.push_back(trace->matched_at.size());
    }
  }
  return matched;
}

AlignResult align(const Graph& g1, const Graph& g2, const AlignConfig& cfg,
                  Rng& rng) {
  if (g1.node_count() == 0 || g2.node_count() == 0)
    throw InvalidParam("align: empty graph");
  if (!g1.connected() || !g2.connected())
    throw InvalidParam(
        "align: input graph is disconnected; extract the largest connected "
        "components first");
  if (cfg.max_rounds == 0) throw InvalidParam("align: max_rounds must be >= 1");
  if (cfg.stop_fraction < 0 || cfg.stop_fraction > 1)
    throw InvalidParam("align: stop_fraction must lie in [0, 1]");

  AlignResult result;
  const auto t_start = Clock::now();

  auto t0 = Clock::now();
  const CentralityRanking c1 =
      eigenvector_centrality(g1, cfg.power_tol, cfg.power_max_iters);
  const CentralityRanking c2 =
      eigenvector_centrality(g2, cfg.power_tol, cfg.power_max_iters);
  result.stats.centrality_ms = ms_since(t0);
  result.stats.centrality_converged = c1.converged && c2.converged;

  PairSet seeds = estimate_seeds(cfg.top_k, cfg.window, c1, c2);
  result.stats.seed_pairs = seeds.size();

  const double target =
      cfg.stop_fraction *
      static_cast<double>(std::min(g1.node_count(), g2.node_count()));

  Matching matching;
  do {
    RoundStats round;

    t0 = Clock::now();
    const Matching confident = safe_expand(g1, g2, seeds, cfg.threshold, rng);
    round.safe_ms = ms_since(t0);
    round.confident_size = confident.size();
    seeds = confident.as_pair_set();  // backtrack: S <- M0

    t0 = Clock::now();
    matching = loose_expand(g1, g2, seeds, c1, c2, rng);
    round.loose_ms = ms_since(t0);
    round.matching_size = matching.size();
    seeds = matching.as_pair_set();  // backtrack: S <- M

    result.stats.rounds.push_back(round);
  } while (static_cast<double>(matching.size()) < target &&
           result.stats.rounds.size() < cfg.max_rounds);

  result.stats.reached_fraction =
      static_cast<double>(matching.size()) >= target;
  result.stats.total_ms = ms_since(t_start);
  result.matching = std::move(matching);
  return result;
}

}  // namespace spectre
