#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hh/rng.hpp"

namespace hh {

/// Epoch of a bucket whose subsample counter reads `count`:
/// t = floor(log2((count / threshold)^2)), increment probability
/// p = min(eps * 2^t, 1). With threshold 1000 this is floor(log2(1e-6 count^2)).
struct EpochState {
  int t = 0;
  double p = 0.0;

  /// count == 0 has no epoch; t is then a large negative sentinel.
  static EpochState of(std::uint64_t count, double threshold, double epsilon);
  bool active() const { return t >= 0; }
};

/// Grid of rows x columns buckets. Each bucket holds a subsampled running
/// count (incremented at rate eps) and one accelerated counter per epoch,
/// incremented at the epoch's probability. Summing counter / probability
/// over epochs estimates how many arrivals the bucket saw after epoch 0
/// began.
class AcceleratedCounters {
 public:
  AcceleratedCounters(std::size_t rows, std::size_t columns, double epsilon,
                      double epoch_threshold, bool incremental = false);

  /// One arrival at bucket (row, column).
  void record(std::size_t row, std::size_t column, Rng& rng);

  /// sum_t T3[row, column, t] / min(eps 2^t, 1).
  double estimate(std::size_t row, std::size_t column) const;

  std::uint64_t subsample_count(std::size_t row, std::size_t column) const {
    return subsample_[index(row, column)];
  }
  std::uint64_t epoch_count(std::size_t row, std::size_t column, int t) const;
  /// Overwrites one accelerated counter; used to set up synthetic buckets.
  void set_epoch_count(std::size_t row, std::size_t column, int t, std::uint32_t count);

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }
  double epsilon() const { return epsilon_; }
  double epoch_threshold() const { return threshold_; }
  /// Number of buckets holding at least one accelerated counter.
  std::size_t active_buckets() const { return epochs_.size(); }

  /// Dense gamma-coded subsample counters plus, per bucket, the epoch list
  /// length and each epoch counter.
  std::uint64_t space_bits() const;

 private:
  std::size_t index(std::size_t row, std::size_t column) const { return column * rows_ + row; }

  std::size_t rows_;
  std::size_t columns_;
  double epsilon_;
  double threshold_;
  bool incremental_;
  std::vector<std::uint32_t> subsample_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> epochs_;  // sparse T3
  std::unordered_map<std::size_t, double> running_;                     // incremental mode
};

}  // namespace hh
