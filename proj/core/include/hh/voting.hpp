#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hh/config.hpp"
#include "hh/report.hpp"
#include "hh/rng.hpp"
#include "hh/sampling.hpp"

namespace hh {

/// A vote: a permutation of [n], most preferred first.
class Ranking {
 public:
  Ranking() = default;

  /// Throws std::invalid_argument unless `order` is a permutation of [size].
  explicit Ranking(std::vector<std::uint32_t> order);

  /// Parses "2,0,1". Whitespace around ids is ignored.
  static Ranking parse(std::string_view text);

  std::size_t size() const { return order_.size(); }
  std::uint32_t operator[](std::size_t position) const { return order_[position]; }
  const std::vector<std::uint32_t>& order() const { return order_; }

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::vector<std::uint32_t> order_;
};

/// Borda scores over a stream of m votes (m known).
///
/// Samples each vote at rate 6l/m with l = 6 log2(6n/delta) / eps^2 and adds,
/// for every candidate, the number of candidates it beats in the vote. Scaled
/// scores are within eps*m*n of the exact ones with probability 1 - delta.
class BordaSketch {
 public:
  explicit BordaSketch(const SketchConfig& cfg);

  /// Throws std::invalid_argument if r does not rank exactly n candidates.
  void insert(const Ranking& r);

  /// All n scores in full-stream units. Throws NoSampleError if nothing was sampled.
  std::vector<double> scores(Scaling scaling = Scaling::kByLength) const;

  /// Candidates whose scaled score reaches (phi - eps/2) m n. Needs eps < phi.
  FrequencyReport report(Scaling scaling = Scaling::kByLength) const;

  /// Highest score, ties to the smallest id.
  ItemEstimate winner(Scaling scaling = Scaling::kByLength) const;

  double sample_size() const { return ell_; }
  double probability() const { return sampler_.probability(); }
  std::uint64_t samples_seen() const { return samples_; }
  const std::vector<std::uint64_t>& raw_scores() const { return raw_; }
  std::uint64_t space_bits() const;

 private:
  double units(Scaling scaling) const;

  SketchConfig cfg_;
  std::uint64_t m_;
  double ell_;
  Rng rng_;
  PowerOfTwoSampler sampler_;
  std::vector<std::uint64_t> raw_;
  std::uint64_t samples_ = 0;
};

/// Maximin scores over a stream of m votes (m known).
///
/// Stores each vote with probability 6l/m, l = 8 ln(6n/delta) / eps^2, and
/// evaluates the pairwise counts D_S(x, y) of the stored votes at report
/// time. maximin(x) = min over y != x of D(x, y).
class MaximinSketch {
 public:
  explicit MaximinSketch(const SketchConfig& cfg);

  void insert(const Ranking& r);

  /// D_S as an n*n row-major matrix: entry (x, y) counts stored votes with
  /// x above y. The diagonal is zero.
  std::vector<std::uint64_t> pairwise() const;

  /// Unscaled maximin of the stored votes; same errors as scores().
  std::vector<std::uint64_t> raw_scores() const;

  /// Throws NoSampleError with no stored votes, UndefinedMaximinError if n = 1.
  std::vector<double> scores(Scaling scaling = Scaling::kByLength) const;

  /// Candidates whose scaled score reaches (phi - eps/2) m. Needs eps < phi.
  FrequencyReport report(Scaling scaling = Scaling::kByLength) const;

  ItemEstimate winner(Scaling scaling = Scaling::kByLength) const;

  double sample_size() const { return ell_; }
  double probability() const { return sampler_.probability(); }
  std::uint64_t samples_seen() const { return samples_; }
  double units(Scaling scaling) const;
  std::uint64_t space_bits() const;

 private:
  SketchConfig cfg_;
  std::uint64_t m_;
  double ell_;
  Rng rng_;
  PowerOfTwoSampler sampler_;
  std::vector<std::uint32_t> votes_;  // stored votes, n ids each
  std::uint64_t samples_ = 0;
};

}  // namespace hh
