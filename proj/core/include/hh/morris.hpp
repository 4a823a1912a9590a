#pragma once

#include <cstdint>
#include <vector>

#include "hh/rng.hpp"

namespace hh {

/// Morris approximate counter with k independent copies.
///
/// Each copy keeps an exponent register c and bumps it with probability
/// 2^-c per event, so 2^c - 1 is an unbiased estimate of the event count.
/// The reported estimate is the (lower) median over the copies.
class MorrisCounter {
 public:
  explicit MorrisCounter(std::size_t repetitions = 1);

  /// Repetitions 2*log2(log2(max_count)/delta), rounded up, at least 1.
  static std::size_t repetitions_for(double max_count, double delta);

  /// One event: every copy flips its own coin.
  void increment(Rng& rng);

  /// `events` increments at once. Equivalent in distribution to calling
  /// increment() that many times; skips ahead with geometric waiting times.
  void add(std::uint64_t events, Rng& rng);

  std::size_t repetitions() const { return registers_.size(); }
  const std::vector<std::uint8_t>& registers() const { return registers_; }

  /// 2^c - 1 for one copy.
  double copy_estimate(std::size_t copy) const;
  double estimate() const;

  /// Sum over copies of the register width in bits.
  std::uint64_t space_bits() const;

 private:
  std::vector<std::uint8_t> registers_;
};

}  // namespace hh
