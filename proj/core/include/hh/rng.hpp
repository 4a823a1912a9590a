#pragma once

#include <cstdint>
#include <random>

namespace hh {

/// Seedable source of private coin tosses shared by every sketch.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so a seed reproduces the same bits on every conforming platform.
/// The derived helpers (uniform01, below, bernoulli) are written here rather
/// than taken from <random> distributions, whose algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// True with probability p (clamped to [0, 1]).
  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return uniform01() < p;
  }

  /// Number of independent trials up to and including the first success,
  /// each succeeding with probability q in (0, 1].
  std::uint64_t geometric(double q);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Mixes (seed, stream) into an independent-looking child seed (splitmix64
/// finalizer). Used to give sub-structures their own reproducible streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace hh
