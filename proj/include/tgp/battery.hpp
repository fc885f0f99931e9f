#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tgp/tanisaki.hpp"

namespace tgp {

/// splitmix64: the documented PRNG behind every seeded report. Chosen for
/// exact cross-platform reproducibility; std distributions are not
/// byte-stable across standard libraries.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
};

/// Numerator in [-9, 9], denominator in {1, 2, 3}.
Rat small_rational(SplitMix64& g);
Rat small_nonzero_rational(SplitMix64& g);

/// Deterministic parameter vectors for lambda: all-zero, all-equal
/// nonzero, all-distinct, mixed repetition, then random fills up to
/// `count` (>= 5 recommended). Patterns that need width collapse
/// gracefully when lambda_1 is small.
std::vector<EvalParams> parameter_battery(const Partition& lam, uint64_t seed,
                                          int count);

/// Vectors with at least two distinct values when lambda_1 >= 2 (split
/// checks); otherwise single-value vectors.
std::vector<EvalParams> multiblock_battery(const Partition& lam, uint64_t seed,
                                           int count);

/// (b, c) pairs with b != 0 for shift/scale checks.
std::vector<std::pair<Rat, Rat>> shift_scale_pairs(uint64_t seed, int count);

/// Stable per-partition stream seed.
uint64_t seed_for(const Partition& lam, uint64_t seed);

}  // namespace tgp
