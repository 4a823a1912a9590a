#include "hh/accelerated_counters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hh/space.hpp"

namespace hh {

EpochState EpochState::of(std::uint64_t count, double threshold, double epsilon) {
  EpochState e;
  if (count == 0) {
    e.t = std::numeric_limits<int>::min() / 2;
    e.p = 0.0;
    return e;
  }
  const double ratio = static_cast<double>(count) / threshold;
  // ilogb is exactly floor(log2(.)) for normal doubles.
  e.t = std::ilogb(ratio * ratio);
  e.p = std::min(std::ldexp(epsilon, e.t), 1.0);
  return e;
}

AcceleratedCounters::AcceleratedCounters(std::size_t rows, std::size_t columns, double epsilon,
                                         double epoch_threshold, bool incremental)
    : rows_(rows),
      columns_(columns),
      epsilon_(epsilon),
      threshold_(epoch_threshold),
      incremental_(incremental),
      subsample_(rows * columns, 0) {
  if (rows == 0 || columns == 0) throw std::invalid_argument("AcceleratedCounters: empty grid");
  if (!(epsilon > 0.0) || epsilon >= 1.0) {
    throw std::invalid_argument("AcceleratedCounters: epsilon must be in (0, 1)");
  }
  if (!(epoch_threshold > 0.0)) {
    throw std::invalid_argument("AcceleratedCounters: epoch threshold must be positive");
  }
}

void AcceleratedCounters::record(std::size_t row, std::size_t column, Rng& rng) {
  const std::size_t cell = index(row, column);
  if (rng.bernoulli(epsilon_)) ++subsample_[cell];
  const EpochState e = EpochState::of(subsample_[cell], threshold_, epsilon_);
  if (!e.active() || !rng.bernoulli(e.p)) return;
  auto& slots = epochs_[cell];
  if (slots.size() <= static_cast<std::size_t>(e.t)) slots.resize(static_cast<std::size_t>(e.t) + 1, 0);
  ++slots[static_cast<std::size_t>(e.t)];
  if (incremental_) running_[cell] += 1.0 / e.p;
}

double AcceleratedCounters::estimate(std::size_t row, std::size_t column) const {
  const std::size_t cell = index(row, column);
  if (incremental_) {
    auto r = running_.find(cell);
    return r == running_.end() ? 0.0 : r->second;
  }
  auto found = epochs_.find(cell);
  if (found == epochs_.end()) return 0.0;
  double sum = 0.0;
  for (std::size_t t = 0; t < found->second.size(); ++t) {
    const double p = std::min(std::ldexp(epsilon_, static_cast<int>(t)), 1.0);
    sum += found->second[t] / p;
  }
  return sum;
}

std::uint64_t AcceleratedCounters::epoch_count(std::size_t row, std::size_t column, int t) const {
  auto found = epochs_.find(index(row, column));
  if (found == epochs_.end() || t < 0 || static_cast<std::size_t>(t) >= found->second.size()) return 0;
  return found->second[static_cast<std::size_t>(t)];
}

void AcceleratedCounters::set_epoch_count(std::size_t row, std::size_t column, int t,
                                          std::uint32_t count) {
  if (row >= rows_ || column >= columns_ || t < 0) {
    throw std::invalid_argument("AcceleratedCounters::set_epoch_count: bad coordinates");
  }
  const std::size_t cell = index(row, column);
  auto& slots = epochs_[cell];
  if (slots.size() <= static_cast<std::size_t>(t)) slots.resize(static_cast<std::size_t>(t) + 1, 0);
  const std::uint32_t old = slots[static_cast<std::size_t>(t)];
  slots[static_cast<std::size_t>(t)] = count;
  if (incremental_) {
    const double p = std::min(std::ldexp(epsilon_, t), 1.0);
    running_[cell] += (static_cast<double>(count) - static_cast<double>(old)) / p;
  }
}

std::uint64_t AcceleratedCounters::space_bits() const {
  std::uint64_t bits = 0;
  for (auto c : subsample_) bits += gamma_bits(c);
  bits += subsample_.size() - epochs_.size();  // empty epoch list: one bit
  for (const auto& [cell, slots] : epochs_) {
    bits += gamma_bits(slots.size());
    for (auto c : slots) bits += gamma_bits(c);
  }
  return bits;
}

}  // namespace hh
