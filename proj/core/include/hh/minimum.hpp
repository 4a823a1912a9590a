#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hh/config.hpp"
#include "hh/report.hpp"
#include "hh/rng.hpp"
#include "hh/sampling.hpp"

namespace hh {

/// Which rule of the report cascade produced the answer.
enum class MinimumRule {
  kCandidatePool,  // large universe: uniform id from a fixed prefix of ids
  kUnsampled,      // some id never reached the presence tier
  kSmallSupport,   // few distinct ids: exact counts of a sample
  kTruncated,      // truncated counts of a larger sample
};

const char* to_string(MinimumRule rule);

struct MinimumResult {
  ItemEstimate item;
  MinimumRule rule = MinimumRule::kCandidatePool;
};

/// eps-minimum: an id whose frequency is within eps*m of the smallest
/// frequency over the universe [n], for a stream of known length m.
///
/// Three independently sampled tiers (natural logs throughout):
///   presence bits  at rate 6 l1/m, l1 = ln(6/(eps delta)) / eps
///   exact counts   at rate 6 l2/m, l2 = ln(6/delta) / eps^2, kept only while
///                  the stream has at most 1/(eps ln(1/eps)) distinct ids
///   capped counts  at rate 6 l3/m, l3 = ln^6(6/(delta eps)) / eps,
///                  truncated at 2 ln^7(2/(eps delta))
/// Universes of at least ceil(1/(delta eps)) ids are answered by a uniform
/// draw from the first ceil(1/(delta eps)) ids: at most 1/eps ids can reach
/// eps*m, so the draw misses them with probability >= 1 - delta.
class MinimumSketch {
 public:
  /// Tiers are materialised for universes up to this size, and for any
  /// universe smaller than the candidate pool (which the report then needs).
  static constexpr std::uint64_t kMaxTieredUniverse = std::uint64_t{1} << 24;

  explicit MinimumSketch(const SketchConfig& cfg);

  void insert(std::uint64_t x);

  MinimumResult report(Scaling scaling = Scaling::kByLength) const;

  std::uint64_t candidate_pool() const { return pool_; }
  std::uint64_t distinct_threshold() const { return distinct_threshold_; }
  std::uint64_t truncation_cap() const { return cap_; }
  bool tiered() const { return tiered_; }
  double sample_size(int tier) const;
  double probability(int tier) const;
  std::uint64_t samples(int tier) const;

  bool presence(std::uint64_t x) const { return tiered_ && presence_[x]; }
  std::uint64_t distinct_seen() const { return distinct_; }
  bool exact_tier_active() const { return distinct_ <= distinct_threshold_; }
  std::uint64_t exact_count(std::uint64_t x) const;
  std::uint64_t capped_count(std::uint64_t x) const;
  /// Largest capped count; never exceeds truncation_cap().
  std::uint64_t max_capped_count() const;

  std::uint64_t space_bits() const;

 private:
  std::uint64_t argmin(const std::unordered_map<std::uint64_t, std::uint64_t>& counts) const;
  double units(int tier, Scaling scaling) const;

  SketchConfig cfg_;
  std::uint64_t m_;
  double ell_[3];
  PowerOfTwoSampler samplers_[3];
  std::uint64_t samples_[3] = {0, 0, 0};
  std::uint64_t pool_;
  std::uint64_t distinct_threshold_;
  std::uint64_t cap_;
  bool tiered_;
  Rng rng_;
  std::vector<bool> presence_;  // S1 bit vector
  std::vector<bool> seen_;      // exact distinct tracking over [n]
  std::uint64_t distinct_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> exact_;   // S2
  std::unordered_map<std::uint64_t, std::uint64_t> capped_;  // S3
};

}  // namespace hh
