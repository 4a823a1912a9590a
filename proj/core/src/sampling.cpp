#include "hh/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hh {

bool sample_pow2(Rng& rng, unsigned k) {
  while (k > 63) {
    if (rng.next() != 0) return false;
    k -= 64;
  }
  if (k == 0) return true;
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  return (rng.next() & mask) == 0;
}

unsigned round_prob(double p) {
  if (!(p > 0.0) || p > 1.0) {
    throw std::invalid_argument("round_prob: probability must be in (0, 1]");
  }
  // ldexp is exact, so the comparison has no rounding slack.
  unsigned k = 0;
  while (std::ldexp(1.0, -static_cast<int>(k + 1)) >= p) ++k;
  return k;
}

PowerOfTwoSampler PowerOfTwoSampler::for_probability(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("PowerOfTwoSampler: probability must be positive");
  return PowerOfTwoSampler(round_prob(std::min(p, 1.0)));
}

double PowerOfTwoSampler::probability() const {
  return std::ldexp(1.0, -static_cast<int>(exponent_));
}

}  // namespace hh
