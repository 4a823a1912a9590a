#pragma once

#include <bit>
#include <cstdint>

namespace hh {

// Bit-level space accounting. Counters are charged as if stored in a
// variable-length array: each value v costs the Elias-gamma code of v + 1,
// which is self-delimiting and charges an empty cell a single bit.

/// Bits needed to write any value in [0, range), at least 1.
inline std::uint64_t fixed_width_bits(std::uint64_t range) {
  if (range <= 2) return 1;
  return static_cast<std::uint64_t>(std::bit_width(range - 1));
}

/// Elias-gamma length of v + 1: 2 * floor(log2(v + 1)) + 1.
inline std::uint64_t gamma_bits(std::uint64_t v) {
  const std::uint64_t w = static_cast<std::uint64_t>(std::bit_width(v + 1));
  return 2 * w - 1;
}

}  // namespace hh
