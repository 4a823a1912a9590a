#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hh/config.hpp"
#include "hh/misra_gries.hpp"
#include "hh/report.hpp"
#include "hh/rng.hpp"
#include "hh/sampling.hpp"
#include "hh/universal_hash.hpp"

namespace hh {

/// Near-optimal (eps, phi)-list heavy hitters for a stream of known length m.
///
/// Samples each element with probability ~6l/m (l = 6 log2(6/delta) / eps^2),
/// hashes sampled ids into [ceil(4 l^2 / delta)] and runs Misra-Gries with
/// ceil(1/eps) counters over the hashed ids. The raw ids of the top
/// ceil(1/phi) counters are kept alongside, in counter order.
///
/// In maximum mode the id table is replaced by one register holding the id
/// with the largest counter (ties to the smaller id).
class SimpleHHSketch {
 public:
  enum class Mode { kList, kMaximum };

  struct Tracked {
    std::uint64_t id;
    std::uint64_t key;  // h(id)
  };

  /// Needs cfg.stream_length. List mode also needs eps < phi.
  explicit SimpleHHSketch(const SketchConfig& cfg, Mode mode = Mode::kList);

  /// Throws std::invalid_argument if x >= n.
  void insert(std::uint64_t x);

  /// Tracked ids whose centred estimate reaches (phi - eps/2) of the sample.
  FrequencyReport report(Scaling scaling = Scaling::kByLength) const;

  /// Id and estimate of the most frequent sampled item. Throws NoSampleError
  /// when nothing was sampled. Only valid in maximum mode.
  ItemEstimate max_report(Scaling scaling = Scaling::kByLength) const;

  const SketchConfig& config() const { return cfg_; }
  Mode mode() const { return mode_; }
  double sample_size() const { return ell_; }
  double probability() const { return sampler_.probability(); }
  std::uint64_t samples_seen() const { return samples_; }
  const UniversalHash& hash() const { return hash_; }
  const CounterTable& table() const { return table_; }
  const std::vector<Tracked>& tracked() const { return tracked_; }
  std::size_t tracked_capacity() const { return top_; }

  /// True iff tracked() lists, in order, the raw ids of table().top(j).
  bool check_consistency() const;

  std::uint64_t space_bits() const;

 private:
  void track_list(std::uint64_t x, std::uint64_t key, CounterTable::InsertResult result);
  void track_max(std::uint64_t x, std::uint64_t key, CounterTable::InsertResult result);
  bool ranks_before(const Tracked& a, const Tracked& b) const;
  double units_per_sample(Scaling scaling) const;
  double centred(std::uint64_t key) const;

  SketchConfig cfg_;
  Mode mode_;
  std::uint64_t m_;
  double ell_;
  Rng rng_;
  UniversalHash hash_;
  PowerOfTwoSampler sampler_;
  CounterTable table_;
  std::size_t top_;
  std::vector<Tracked> tracked_;
  std::optional<Tracked> max_;
  std::uint64_t samples_ = 0;
};

/// ceil(1/x) with a small tolerance so that 1/0.05 gives 20, not 21.
std::size_t reciprocal_ceil(double x);

}  // namespace hh
