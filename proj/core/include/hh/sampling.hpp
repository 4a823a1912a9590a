#pragma once

#include <cstdint>

#include "hh/rng.hpp"

namespace hh {

/// Returns true with probability exactly 2^-k.
///
/// Draws one 64-bit word and accepts iff its low k bits are all zero. For
/// k > 63 the test is chained over several words, so the probabilities
/// multiply.
bool sample_pow2(Rng& rng, unsigned k);

/// Largest k with 2^-k >= p, i.e. k = floor(log2(1/p)). The effective
/// probability 2^-k lies in [p, 2p). Throws std::invalid_argument unless
/// 0 < p <= 1.
unsigned round_prob(double p);

/// Bernoulli sampler fixed at a power-of-two rate. Only the exponent is
/// stored, which is O(log log m) bits for rates down to 1/m.
class PowerOfTwoSampler {
 public:
  PowerOfTwoSampler() = default;

  /// Samples at round_prob(min(p, 1)). p must be positive.
  static PowerOfTwoSampler for_probability(double p);

  explicit PowerOfTwoSampler(unsigned exponent) : exponent_(exponent) {}

  bool accept(Rng& rng) const { return sample_pow2(rng, exponent_); }

  unsigned exponent() const { return exponent_; }
  double probability() const;

 private:
  unsigned exponent_ = 0;
};

}  // namespace hh
