#pragma once

#include <cstdint>
#include <vector>

#include "hh/accelerated_counters.hpp"
#include "hh/config.hpp"
#include "hh/misra_gries.hpp"
#include "hh/report.hpp"
#include "hh/rng.hpp"
#include "hh/sampling.hpp"
#include "hh/universal_hash.hpp"

namespace hh {

/// Space-optimal (eps, phi)-list heavy hitters for a stream of known length.
///
/// A sampled substream of expected length l = C_s / eps^2 feeds
///  - a Misra-Gries table over raw ids with ceil(2/phi) counters, which
///    supplies the candidates, and
///  - J = C_c log2(12/phi) independent hash columns of C_r / eps buckets,
///    each bucket an accelerated counter (see AcceleratedCounters).
/// A candidate's frequency is the median of its J bucket estimates; it is
/// reported when that median reaches (phi - eps/2) of the sampled length.
class OptimalHHSketch {
 public:
  /// Needs cfg.stream_length and eps < phi.
  explicit OptimalHHSketch(const SketchConfig& cfg);

  void insert(std::uint64_t x);

  /// Bucket estimate for candidate x in column j, in sampled units.
  /// Throws NotCandidateError if x has no counter in the candidate table.
  double estimate_column(std::uint64_t x, std::size_t column) const;

  /// Median over all columns; same precondition as estimate_column.
  double estimate(std::uint64_t x) const;

  FrequencyReport report(Scaling scaling = Scaling::kByLength) const;

  std::uint64_t space_bits() const;

  const SketchConfig& config() const { return cfg_; }
  const OptimalConstants& constants() const { return constants_; }
  double sample_size() const { return ell_; }
  double probability() const { return sampler_.probability(); }
  std::uint64_t samples_seen() const { return samples_; }
  std::size_t columns() const { return hashes_.size(); }
  std::size_t rows() const { return counters_.rows(); }
  const CounterTable& candidates() const { return table_; }
  const AcceleratedCounters& counters() const { return counters_; }
  std::size_t bucket_of(std::uint64_t x, std::size_t column) const {
    return static_cast<std::size_t>(hashes_.at(column)(x));
  }

 private:
  SketchConfig cfg_;
  OptimalConstants constants_;
  std::uint64_t m_;
  double ell_;
  Rng rng_;
  std::vector<UniversalHash> hashes_;
  PowerOfTwoSampler sampler_;
  CounterTable table_;
  AcceleratedCounters counters_;
  std::uint64_t samples_ = 0;
};

}  // namespace hh
