#pragma once

#include <cstdint>

#include "hh/rng.hpp"

namespace hh {

__extension__ typedef unsigned __int128 uint128_t;

/// Carter-Wegman hash h(x) = ((a*x + b) mod P) mod r over the domain [0, n),
/// with P = 2^61 - 1. Drawing (a, b) uniformly gives Pr[h(x) = h(y)] <= 1/r
/// for x != y, so a set S maps injectively with probability >= 1 - delta
/// when r >= |S|^2 / delta.
class UniversalHash {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  /// Draws a fresh member of the family. Requires 1 <= n <= kPrime, r >= 1.
  UniversalHash(Rng& rng, std::uint64_t domain, std::uint64_t range);

  /// Fixed parameters, for tests and replay. 1 <= a < kPrime, b < kPrime.
  UniversalHash(std::uint64_t a, std::uint64_t b, std::uint64_t domain, std::uint64_t range);

  /// Throws std::invalid_argument if x >= domain().
  std::uint64_t operator()(std::uint64_t x) const;

  /// No domain check; x must already be validated by the caller.
  std::uint64_t eval_unchecked(std::uint64_t x) const {
    const uint128_t prod = static_cast<uint128_t>(a_) * x + b_;
    std::uint64_t v = static_cast<std::uint64_t>(prod & kPrime) + static_cast<std::uint64_t>(prod >> 61);
    v = (v & kPrime) + (v >> 61);
    if (v >= kPrime) v -= kPrime;
    return v % range_;
  }

  std::uint64_t domain() const { return domain_; }
  std::uint64_t range() const { return range_; }
  std::uint64_t multiplier() const { return a_; }
  std::uint64_t offset() const { return b_; }

  /// Bits to describe the function: two residues mod P.
  static constexpr std::uint64_t description_bits() { return 2 * 61; }

 private:
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t domain_;
  std::uint64_t range_;
};

}  // namespace hh
