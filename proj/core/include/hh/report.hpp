#pragma once

#include <cstdint>
#include <vector>

namespace hh {

struct ItemEstimate {
  std::uint64_t id = 0;
  double estimate = 0.0;  // in full-stream units

  friend bool operator==(const ItemEstimate&, const ItemEstimate&) = default;
};

/// Items with estimates scaled to the full stream, plus diagnostics.
struct FrequencyReport {
  std::vector<ItemEstimate> items;
  std::uint64_t samples_seen = 0;
  std::uint64_t bits_used = 0;

  friend bool operator==(const FrequencyReport&, const FrequencyReport&) = default;
};

/// How sampled counts are turned into full-stream units.
enum class Scaling {
  kByLength,       // multiply by m / samples_seen (m known up front)
  kByProbability,  // divide by the sampling probability (m unknown)
};

}  // namespace hh
