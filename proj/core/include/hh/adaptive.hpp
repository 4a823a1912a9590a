#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "hh/config.hpp"
#include "hh/minimum.hpp"
#include "hh/morris.hpp"
#include "hh/rng.hpp"
#include "hh/simple_hh.hpp"
#include "hh/voting.hpp"

namespace hh {

enum class LengthTracking {
  kMorris,  // O(log log m) bits; the default
  kExact,   // plain counter, for deterministic tests of the schedule
};

struct AdaptiveOptions {
  /// Largest stream length the Morris counter is sized for.
  double max_length = 0x1p48;
  LengthTracking tracking = LengthTracking::kMorris;
};

/// Runs fixed-length sketches over a stream whose length is not known.
///
/// Generation g is a sketch sized for an assumed length of eps^-(g + k), k
/// fixed by the factory. Generation 1 starts with the stream. When the
/// length estimate reaches eps^-g for g >= 2, generation g starts, and
/// generation g - 2 (if any) is dropped. So at most two generations are
/// live, and the older one has missed at most an eps fraction of the stream.
/// Reports come from the older generation, scaled by its sampling rate.
///
/// With Morris tracking the estimate used is the median estimate / 4, so a
/// generation is never started late because of an over-estimate.
template <class Sketch>
class AdaptiveSketch {
 public:
  using Factory = std::function<Sketch(int generation)>;

  AdaptiveSketch(double epsilon, double delta, std::uint64_t seed, Factory make,
                 AdaptiveOptions options = {})
      : epsilon_(epsilon),
        options_(options),
        rng_(derive_seed(seed, 0)),
        morris_(MorrisCounter::repetitions_for(options.max_length, delta)),
        make_(std::move(make)) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");
    if (!(delta > 0.0) || !(delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
    live_.push_back(Live{1, 0, make_(1)});
    started_ = 1;
    next_threshold_ = std::pow(1.0 / epsilon_, 2);
  }

  template <class Item>
  void insert(const Item& x) {
    if (options_.tracking == LengthTracking::kMorris) morris_.increment(rng_);
    ++items_;
    for (auto& g : live_) g.sketch.insert(x);
    while (length_estimate() >= next_threshold_) start_next();
    if (live_.size() > 2) throw std::logic_error("AdaptiveSketch: more than two live generations");
  }

  /// Lower bound on the stream length that drives the schedule.
  double length_estimate() const {
    if (options_.tracking == LengthTracking::kExact) return static_cast<double>(items_);
    return morris_.estimate() / 4.0;
  }

  const Sketch& oldest() const { return live_.front().sketch; }
  int oldest_generation() const { return live_.front().generation; }
  std::size_t live() const { return live_.size(); }
  int generations_started() const { return started_; }
  std::uint64_t discards() const { return discards_; }
  const MorrisCounter& morris() const { return morris_; }

  /// Items that arrived before the oldest live generation started. Kept for
  /// diagnostics; not part of the sketch state.
  std::uint64_t items_before_oldest() const { return live_.front().start; }
  std::uint64_t items_seen() const { return items_; }

  std::uint64_t space_bits() const {
    std::uint64_t bits = morris_.space_bits();
    for (const auto& g : live_) bits += g.sketch.space_bits();
    return bits;
  }

 private:
  struct Live {
    int generation;
    std::uint64_t start;
    Sketch sketch;
  };

  void start_next() {
    ++started_;
    next_threshold_ = std::pow(1.0 / epsilon_, started_ + 1);
    live_.push_back(Live{started_, items_, make_(started_)});
    if (live_.size() > 2) {
      live_.pop_front();
      ++discards_;
    }
  }

  double epsilon_;
  AdaptiveOptions options_;
  Rng rng_;
  MorrisCounter morris_;
  Factory make_;
  std::deque<Live> live_;
  int started_ = 0;
  double next_threshold_ = 0.0;
  std::uint64_t discards_ = 0;
  std::uint64_t items_ = 0;
};

/// Config for generation g: seed derive_seed(cfg.seed, g), stream length
/// ceil(eps^-(g + length_offset)) (capped at 2^62) and the given sample size.
SketchConfig generation_config(const SketchConfig& cfg, int generation, int length_offset,
                               std::optional<double> sample_size);

/// Per-generation sample size of the list/maximum wrapper:
/// scale * log2(6/delta) / eps^3, unless cfg.sample_size overrides it.
double adaptive_sample_size(const SketchConfig& cfg);

/// Generations sized for eps^-(g+2), each with adaptive_sample_size(cfg).
AdaptiveSketch<SimpleHHSketch> make_adaptive_heavy_hitters(const SketchConfig& cfg,
                                                          SimpleHHSketch::Mode mode,
                                                          AdaptiveOptions options = {});

/// Generations sized for eps^-(g+1) with the inner sketch's own sample sizes.
AdaptiveSketch<MinimumSketch> make_adaptive_minimum(const SketchConfig& cfg, AdaptiveOptions options = {});
AdaptiveSketch<BordaSketch> make_adaptive_borda(const SketchConfig& cfg, AdaptiveOptions options = {});
AdaptiveSketch<MaximinSketch> make_adaptive_maximin(const SketchConfig& cfg, AdaptiveOptions options = {});

}  // namespace hh
