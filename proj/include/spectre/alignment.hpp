#pragma once

#include <cstdint>
#include <vector>

#include "spectre/centrality.hpp"
#include "spectre/graph.hpp"
#include "spectre/matching.hpp"
#include "spectre/rng.hpp"
#include "spectre/score_table.hpp"

namespace spectre {

// Noisy seed estimation: the rank-t node of g1 (t = 1..k) is paired with the
// g2 nodes at ranks [t-w, t+w] clipped to the top-k band, so the output holds
// (2w+1)k - w(w+1) pairs whenever k >= w.
// Requires k <= min(n1, n2) and k + w <= min(n1, n2).
PairSet estimate_seeds(std::size_t k, std::size_t w, const CentralityRanking& c1,
                       const CentralityRanking& c2);

// One spreading step: +1 to every pair in N_i(g1) x N_j(g2). The origin pair
// never increments itself.
void spread(ScoreTable& scores, const Graph& g1, const Graph& g2, NodeId i,
            NodeId j);

// Optional instrumentation for tests.
struct ExpandTrace {
  // (pair, its score at the moment it was matched)
  std::vector<std::pair<PairKey, std::uint32_t>> matched_at;
  // loose_expand: the seed set spread in each outer round (round 0 = input)
  std::vector<std::vector<PairKey>> spread_rounds;
  // loose_expand: every rebuilt seed set, plus the matching size at that
  // moment (prefix of matched_at), so invariants can be replayed offline
  std::vector<std::vector<PairKey>> rebuilt_sets;
  std::vector<std::size_t> matched_count_at_rebuild;
};

// Confident percolation. Scores start from zero; every seed spreads once;
// then, while some pair with both nodes unmatched has score >= threshold, a
// uniformly random pair among the highest-scoring eligible ones is matched
// and spreads (unconditionally - no used-pair bookkeeping here).
// Requires threshold >= 2. Empty seeds yield an empty matching.
Matching safe_expand(const Graph& g1, const Graph& g2, const PairSet& seeds,
                     std::uint32_t threshold, Rng& rng,
                     ExpandTrace* trace = nullptr);

// Relaxed percolation with rebuilding. Outer loop: the working seed set
// spreads (each pair at most once ever, tracked by the used set). Inner loop:
// while some pair with both nodes unmatched has score >= 2, match the
// eligible max-score pair with the smallest centrality difference
// |C1(u) - C2(v)| (ties uniformly at random); it spreads only if not yet
// used. Rebuild: the new seed set is every pair with score >= 1, not yet
// used, with both nodes unmatched (the unmatched, unused product-neighbors
// of the pairs that have spread); empty rebuild terminates.
Matching loose_expand(const Graph& g1, const Graph& g2, const PairSet& seeds,
                      const CentralityRanking& c1, const CentralityRanking& c2,
                      Rng& rng, ExpandTrace* trace = nullptr);

struct AlignConfig {
  std::size_t top_k = 0;        // k: seeds kept per network
  std::size_t window = 1;       // w: rank window
  std::uint32_t threshold = 4;  // r: confident-percolation score threshold
  double stop_fraction = 0.75;  // f: stop once |M| >= f * min(n1, n2)
  std::size_t max_rounds = 5;
  double power_tol = 1e-10;
  std::size_t power_max_iters = 1000;
};

struct RoundStats {
  std::size_t confident_size = 0;  // |M0|
  std::size_t matching_size = 0;   // |M|
  double safe_ms = 0;
  double loose_ms = 0;
};

struct RunStats {
  std::size_t seed_pairs = 0;
  double centrality_ms = 0;
  double total_ms = 0;
  std::vector<RoundStats> rounds;
  bool reached_fraction = false;
  bool centrality_converged = true;
};

struct AlignResult {
  Matching matching;
  RunStats stats;
};

// Full driver: centralities, seed estimation, then rounds of
// safe_expand -> backtrack -> loose_expand -> backtrack until the matching
// covers stop_fraction of the smaller network or max_rounds is hit. The
// first round always runs. Requires both graphs connected.
AlignResult align(const Graph& g1, const Graph& g2, const AlignConfig& cfg,
                  Rng& rng);

}  // namespace spectre
