#pragma once

#include <cstdint>
#include <vector>

#include "nsbox/box.hpp"

namespace nsbox {

/// 64-bit linear congruential generator (Knuth's MMIX multiplier), seed
/// dispersed through a splitmix64 finalizer. Fixed and documented so every
/// sampled corpus is reproducible bit-for-bit.
class Lcg64 {
public:
  explicit Lcg64(std::uint64_t seed);

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // uniform-ish in [0, n), n >= 1

private:
  std::uint64_t state_;
};

/// k nonnegative rationals summing to exactly one, each with denominator
/// dividing `denominator` (cut-point composition of the integer simplex).
std::vector<Rational> sample_simplex_weights(Lcg64& rng, int k, long denominator = 1000);

/// Deterministic pseudo-random rational mixture over the 24 nonsignaling
/// vertices; nonsignaling by construction, identical box for identical seed.
Box sample_nonsignaling(std::uint64_t seed);

/// Random product box P(a|A_x) P(b|B_y) with rational marginals of
/// denominator dividing `denominator`.
Box sample_product_box(Lcg64& rng, long denominator = 1000);

}  // namespace nsbox
