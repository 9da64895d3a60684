#pragma once

#include <cstdint>
#include <random>

#include "spectre/types.hpp"

namespace spectre {

// Deterministic RNG used by every randomized step. The engine is
// std::mt19937_64 (bit-stable everywhere); the draws below are pinned here
// because the standard <random> distributions are implementation-defined,
// which would break the reproducibility contract (same seed, same result,
// any platform).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound), bound > 0. Rejection sampling, no
  // modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InvalidParam("Rng::below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Stateless derivation of independent seeds (splitmix64 chain). Used to give
// every sweep cell / trial its own stream from one master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace spectre
