#pragma once

#include <cstdint>
#include <optional>

namespace hh {

/// Constants of the space-optimal list heavy hitters sketch. Defaults are
/// the values the algorithm is analysed with; they are far larger than a
/// desk-scale stream can feed, so tests and the CLI shrink them with scaled().
struct OptimalConstants {
  double sample = 1e5;            // sampled length l = sample / eps^2
  double columns = 200;           // J = columns * log2(12 / phi)
  double rows = 100;              // rows per column = rows / eps
  double epoch_threshold = 1000;  // subsample count at which epoch 0 starts

  /// Shrinks the sample size, column count and epoch threshold by `factor`
  /// in (0, 1]. Rows stay at rows/eps so the average subsample count per
  /// bucket keeps its ratio to the epoch threshold.
  OptimalConstants scaled(double factor) const;
};

/// Parameters shared by every sketch.
struct SketchConfig {
  double epsilon = 0.1;
  double phi = 0.5;
  double delta = 0.1;
  std::uint64_t universe = 0;                  // n; ids are 0 .. n-1
  std::optional<std::uint64_t> stream_length;  // m, when known in advance
  std::uint64_t seed = 0;
  /// Multiplies the sample-size constants, in (0, 1].
  double scale = 1.0;
  /// Replaces the computed sample size l where a sketch has a single one.
  std::optional<double> sample_size;
  /// Used by OptimalHHSketch only; scale is applied on top.
  OptimalConstants optimal{};
  /// Optional worst-case space guard for OptimalHHSketch, in bits.
  std::optional<std::uint64_t> space_budget_bits;
  /// OptimalHHSketch keeps per-column estimates current on every insert.
  bool incremental_estimates = false;
};

/// Throws std::invalid_argument unless 0 < eps < 1, 0 < delta < 1, n >= 1,
/// 0 < scale <= 1 and, when given, m >= 1.
void validate_common(const SketchConfig& cfg);

/// validate_common plus 0 < eps < phi <= 1.
void validate_list(const SketchConfig& cfg);

/// Stream length for sizing; throws std::invalid_argument when absent.
std::uint64_t require_stream_length(const SketchConfig& cfg, const char* who);

}  // namespace hh
