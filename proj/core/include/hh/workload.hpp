#pragma once

#include <cstdint>
#include <vector>

#include "hh/rng.hpp"
#include "hh/voting.hpp"

namespace hh {

// Synthetic streams for tests, benchmarks and the verify harness.

/// Zipf(s) over [n]: id i has weight 1/(i+1)^s. Sampled by inverting the CDF.
class ZipfDistribution {
 public:
  ZipfDistribution(std::uint64_t n, double exponent);

  std::uint64_t operator()(Rng& rng) const;

  /// Probability of id i.
  double probability(std::uint64_t i) const;
  std::uint64_t size() const { return cdf_.size(); }

 private:
  std::vector<double> cdf_;
};

std::vector<std::uint64_t> zipf_stream(std::uint64_t n, double exponent, std::uint64_t m,
                                       std::uint64_t seed);

std::vector<std::uint64_t> uniform_stream(std::uint64_t n, std::uint64_t m, std::uint64_t seed);

/// Uniformly random permutation of [n].
Ranking random_ranking(std::uint32_t n, Rng& rng);

/// Votes clustered around a few reference rankings: each vote picks one of
/// `clusters` references with Zipf(1) weights and applies n/2 random
/// adjacent swaps.
std::vector<Ranking> clustered_votes(std::uint32_t n, std::uint64_t m, std::uint64_t seed,
                                     std::uint32_t clusters = 5);

}  // namespace hh
