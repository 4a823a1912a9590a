#include "hh/morris.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "hh/sampling.hpp"

namespace hh {

MorrisCounter::MorrisCounter(std::size_t repetitions) : registers_(repetitions, 0) {
  if (repetitions == 0) throw std::invalid_argument("MorrisCounter: repetitions must be positive");
}

std::size_t MorrisCounter::repetitions_for(double max_count, double delta) {
  if (!(delta > 0.0) || delta >= 1.0) {
    throw std::invalid_argument("MorrisCounter: delta must be in (0, 1)");
  }
  const double log_m = std::log2(std::max(max_count, 2.0));
  const double k = 2.0 * std::log2(log_m / delta);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(k)));
}

void MorrisCounter::increment(Rng& rng) {
  for (auto& c : registers_) {
    if (c < 255 && sample_pow2(rng, c)) ++c;
  }
}

void MorrisCounter::add(std::uint64_t events, Rng& rng) {
  for (auto& c : registers_) {
    std::uint64_t remaining = events;
    while (remaining > 0 && c < 255) {
      const std::uint64_t wait = rng.geometric(std::ldexp(1.0, -static_cast<int>(c)));
      if (wait > remaining) break;
      remaining -= wait;
      ++c;
    }
  }
}

double MorrisCounter::copy_estimate(std::size_t copy) const {
  return std::ldexp(1.0, registers_.at(copy)) - 1.0;
}

double MorrisCounter::estimate() const {
  std::vector<std::uint8_t> sorted(registers_);
  auto mid = sorted.begin() + static_cast<std::ptrdiff_t>((sorted.size() - 1) / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());
  return std::ldexp(1.0, *mid) - 1.0;
}

std::uint64_t MorrisCounter::space_bits() const {
  std::uint64_t bits = 0;
  for (auto c : registers_) bits += std::max<std::uint64_t>(1, std::bit_width(static_cast<unsigned>(c)));
  return bits;
}

}  // namespace hh
