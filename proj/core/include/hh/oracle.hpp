#pragma once

#include <cstdint>
#include <vector>

#include "hh/report.hpp"
#include "hh/voting.hpp"

namespace hh {

// Exact reference answers. These hold the whole stream summary in memory and
// exist to check sketches at desk scale.

/// Exact frequencies over the universe [n].
class ExactTally {
 public:
  explicit ExactTally(std::uint64_t universe);

  void add(std::uint64_t x);
  template <class It>
  void add(It first, It last) {
    for (; first != last; ++first) add(*first);
  }

  std::uint64_t universe() const { return counts_.size(); }
  std::uint64_t length() const { return m_; }
  std::uint64_t frequency(std::uint64_t x) const { return counts_.at(x); }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t m_ = 0;
};

/// mandatory: f >= phi*m. forbidden: f <= (phi - eps)*m. Both sorted by id.
struct HeavyHitterSets {
  std::vector<std::uint64_t> mandatory;
  std::vector<std::uint64_t> forbidden;
};

/// Throws std::invalid_argument unless 0 < eps < phi <= 1.
HeavyHitterSets exact_heavy_hitters(const ExactTally& t, double epsilon, double phi);

/// Smallest / largest frequency over the whole universe, ties to the smaller
/// id. Throws NoDataError on an empty stream.
ItemEstimate exact_min(const ExactTally& t);
ItemEstimate exact_max(const ExactTally& t);

/// Exact pairwise counts and Borda scores of a vote stream over n candidates.
class VoteTally {
 public:
  explicit VoteTally(std::uint32_t candidates);

  /// Throws std::invalid_argument if r does not rank exactly n candidates.
  void add(const Ranking& r);

  std::uint32_t candidates() const { return n_; }
  std::uint64_t length() const { return m_; }
  /// Votes placing x above y.
  std::uint64_t pairwise(std::uint32_t x, std::uint32_t y) const { return d_[static_cast<std::size_t>(x) * n_ + y]; }

  /// Throws std::logic_error if D(x,y) + D(y,x) != m for some pair or the
  /// Borda scores do not total m n(n-1)/2.
  void check_consistency() const;

 private:
  std::uint32_t n_;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> d_;
};

std::vector<std::uint64_t> exact_borda(const VoteTally& t);

/// Throws UndefinedMaximinError if n = 1.
std::vector<std::uint64_t> exact_maximin(const VoteTally& t);

/// Outcome of checking one list report against the exact answer.
struct ListCheck {
  bool complete = true;  // every mandatory id reported
  bool sound = true;     // no forbidden id reported
  bool accurate = true;  // every reported estimate within the error bound

  bool ok() const { return complete && sound && accurate; }
};

/// Classifies a frequency report under the (eps, phi) contract: estimates
/// must be within eps*m of the true frequency.
ListCheck check_list_report(const FrequencyReport& report, const ExactTally& t, double epsilon,
                            double phi);

/// Same contract for scores: ids with score >= phi*unit are mandatory, ids
/// with score <= (phi - eps)*unit forbidden, estimates within eps*unit.
ListCheck check_score_report(const FrequencyReport& report, const std::vector<std::uint64_t>& exact,
                             double unit, double epsilon, double phi);

}  // namespace hh
