#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "spectre/rng.hpp"
#include "spectre/types.hpp"

namespace spectre {

// Sparse pair-score table over the implicit product graph. Only pairs hit by
// at least one spread are materialized; everything else has score 0.
//
// Max-score retrieval uses per-score buckets with lazy invalidation: each
// increment pushes the pair into the bucket of its new score, and stale or
// ineligible entries are discarded when a bucket is inspected. Scores only
// grow, and eligibility must be monotone (a pair reported ineligible must
// never become eligible again) - both algorithms satisfy this because
// eligibility is "both nodes unmatched" and matches are permanent within a
// run. Under those rules a bucket entry is dropped permanently the moment it
// is observed invalid, which keeps retrieval amortized O(1) per increment.
class ScoreTable {
 public:
  void add_one(PairKey p) {
    std::uint32_t& s = scores_[p];
    ++s;
    ++mass_;
    if (buckets_.size() <= s) buckets_.resize(s + 1);
    buckets_[s].push_back(p);
    if (s > max_bound_) max_bound_ = s;
  }

  std::uint32_t score(PairKey p) const {
    auto it = scores_.find(p);
    return it == scores_.end() ? 0 : it->second;
  }

  // Total number of increments ever applied.
  std::uint64_t total_mass() const { return mass_; }

  // Number of materialized pairs.
  std::size_t touched() const { return scores_.size(); }

  // Keys with score >= 1, in no particular order (hash order). Callers that
  // care about determinism must sort.
  std::vector<PairKey> touched_keys() const {
    std::vector<PairKey> keys;
    keys.reserve(scores_.size());
    for (const auto& [k, v] : scores_) keys.push_back(k);
    return keys;
  }

  // Uniformly random pair among the eligible pairs of maximal score, provided
  // that score is >= min_score; removes it from its bucket (callers match it
  // immediately). Rejection sampling: an invalid array slot hit by the draw is
  // swap-removed, so every draw either returns or permanently shrinks the
  // bucket, and the result is uniform over the eligible set.
  template <typename EligibleFn>
  std::optional<PairKey> pick_max_uniform(std::uint32_t min_score,
                                          const EligibleFn& eligible, Rng& rng) {
    if (min_score == 0) min_score = 1;  // score-0 pairs are never materialized
    while (max_bound_ >= min_score) {
      auto& bucket = buckets_[max_bound_];
      while (!bucket.empty()) {
        const std::size_t idx =
            bucket.size() == 1 ? 0 : static_cast<std::size_t>(rng.below(bucket.size()));
        const PairKey p = bucket[idx];
        bucket[idx] = bucket.back();
        bucket.pop_back();
        if (scores_.find(p)->second == max_bound_ && eligible(p)) return p;
      }
      --max_bound_;
    }
    return std::nullopt;
  }

  // Same candidate pool, but returns the pair minimizing cost; cost ties are
  // broken uniformly at random. The whole top bucket is scanned (and scrubbed
  // of invalid entries) per call.
  template <typename EligibleFn, typename CostFn>
  std::optional<PairKey> pick_max_min_cost(std::uint32_t min_score,
                                           const EligibleFn& eligible,
                                           const CostFn& cost, Rng& rng) {
    if (min_score == 0) min_score = 1;
    while (max_bound_ >= min_score) {
      auto& bucket = buckets_[max_bound_];
      scrub(bucket, eligible);
      if (bucket.empty()) {
        --max_bound_;
        continue;
      }
      double best = cost(bucket[0]);
      ties_.assign(1, 0);
      for (std::size_t i = 1; i < bucket.size(); ++i) {
        const double c = cost(bucket[i]);
        if (c < best) {
          best = c;
          ties_.assign(1, i);
        } else if (c == best) {
          ties_.push_back(i);
        }
      }
      const std::size_t idx =
          ties_.size() == 1 ? ties_[0]
                            : ties_[static_cast<std::size_t>(rng.below(ties_.size()))];
      const PairKey p = bucket[idx];
      bucket[idx] = bucket.back();
      bucket.pop_back();
      return p;
    }
    return std::nullopt;
  }

  // The exact eligible arg-max set with score >= min_score (verification aid;
  // still scrubs invalid entries, which is semantics-preserving).
  template <typename EligibleFn>
  std::vector<PairKey> max_candidates(std::uint32_t min_score,
                                      const EligibleFn& eligible) {
    if (min_score == 0) min_score = 1;
    while (max_bound_ >= min_score) {
      auto& bucket = buckets_[max_bound_];
      scrub(bucket, eligible);
      if (!bucket.empty()) return bucket;
      --max_bound_;
    }
    return {};
  }

 private:
  template <typename EligibleFn>
  void scrub(std::vector<PairKey>& bucket, const EligibleFn& eligible) {
    std::size_t i = 0;
    while (i < bucket.size()) {
      const PairKey p = bucket[i];
      if (scores_.find(p)->second != max_bound_ || !eligible(p)) {
        bucket[i] = bucket.back();
        bucket.pop_back();
      } else {
        ++i;
      }
    }
  }

  absl::flat_hash_map<PairKey, std::uint32_t> scores_;
  std::vector<std::vector<PairKey>> buckets_;
  std::vector<std::size_t> ties_;
  std::uint32_t max_bound_ = 0;
  std::uint64_t mass_ = 0;
};

}  // namespace spectre
