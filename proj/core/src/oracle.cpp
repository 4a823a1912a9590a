#include "hh/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hh/errors.hpp"

namespace hh {

ExactTally::ExactTally(std::uint64_t universe) : counts_(universe, 0) {
  if (universe == 0) throw std::invalid_argument("ExactTally: universe size must be positive");
}

void ExactTally::add(std::uint64_t x) {
  if (x >= counts_.size()) {
    throw std::invalid_argument("item " + std::to_string(x) + " outside universe of size " +
                                std::to_string(counts_.size()));
  }
  ++counts_[x];
  ++m_;
}

HeavyHitterSets exact_heavy_hitters(const ExactTally& t, double epsilon, double phi) {
  if (!(epsilon > 0.0) || !(phi > epsilon) || phi > 1.0) {
    throw std::invalid_argument("exact_heavy_hitters: need 0 < epsilon < phi <= 1");
  }
  const double m = static_cast<double>(t.length());
  HeavyHitterSets out;
  for (std::uint64_t x = 0; x < t.universe(); ++x) {
    const double f = static_cast<double>(t.counts()[x]);
    if (f >= phi * m) out.mandatory.push_back(x);
    if (f <= (phi - epsilon) * m) out.forbidden.push_back(x);
  }
  return out;
}

ItemEstimate exact_min(const ExactTally& t) {
  if (t.length() == 0) throw NoDataError("exact_min: empty stream");
  std::uint64_t best = 0;
  for (std::uint64_t x = 1; x < t.universe(); ++x) {
    if (t.counts()[x] < t.counts()[best]) best = x;
  }
  return ItemEstimate{best, static_cast<double>(t.counts()[best])};
}

ItemEstimate exact_max(const ExactTally& t) {
  if (t.length() == 0) throw NoDataError("exact_max: empty stream");
  std::uint64_t best = 0;
  for (std::uint64_t x = 1; x < t.universe(); ++x) {
    if (t.counts()[x] > t.counts()[best]) best = x;
  }
  return ItemEstimate{best, static_cast<double>(t.counts()[best])};
}

VoteTally::VoteTally(std::uint32_t candidates)
    : n_(candidates), d_(static_cast<std::size_t>(candidates) * candidates, 0) {
  if (candidates == 0) throw std::invalid_argument("VoteTally: need at least one candidate");
}

void VoteTally::add(const Ranking& r) {
  if (r.size() != n_) {
    throw std::invalid_argument("ranking lists " + std::to_string(r.size()) + " candidates, expected " +
                                std::to_string(n_));
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) ++d_[static_cast<std::size_t>(r[a]) * n_ + r[b]];
  }
  ++m_;
}

std::vector<std::uint64_t> exact_borda(const VoteTally& t) {
  const std::uint32_t n = t.candidates();
  std::vector<std::uint64_t> out(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (y != x) out[x] += t.pairwise(x, y);
    }
  }
  return out;
}

std::vector<std::uint64_t> exact_maximin(const VoteTally& t) {
  const std::uint32_t n = t.candidates();
  if (n < 2) throw UndefinedMaximinError("maximin needs at least two candidates");
  std::vector<std::uint64_t> out(n, UINT64_MAX);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (y != x) out[x] = std::min(out[x], t.pairwise(x, y));
    }
  }
  return out;
}

void VoteTally::check_consistency() const {
  std::uint64_t borda_total = 0;
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (pairwise(x, x) != 0) throw std::logic_error("VoteTally: nonzero diagonal");
    for (std::uint32_t y = x + 1; y < n_; ++y) {
      if (pairwise(x, y) + pairwise(y, x) != m_) {
        throw std::logic_error("VoteTally: pair not ordered by every vote");
      }
    }
  }
  for (auto s : exact_borda(*this)) borda_total += s;
  if (borda_total != m_ * n_ * (n_ - 1) / 2) throw std::logic_error("VoteTally: Borda total mismatch");
}

namespace {

ListCheck check(const FrequencyReport& report, const std::vector<std::uint64_t>& exact, double unit,
                double epsilon, double phi) {
  ListCheck out;
  std::unordered_map<std::uint64_t, double> reported;
  for (const auto& item : report.items) {
    reported[item.id] = item.estimate;
    if (item.id >= exact.size()) {
      out.sound = false;
      out.accurate = false;
      continue;
    }
    const double f = static_cast<double>(exact[item.id]);
    if (f <= (phi - epsilon) * unit) out.sound = false;
    if (std::abs(item.estimate - f) > epsilon * unit) out.accurate = false;
  }
  for (std::uint64_t x = 0; x < exact.size(); ++x) {
    if (static_cast<double>(exact[x]) >= phi * unit && !reported.count(x)) out.complete = false;
  }
  return out;
}

}  // namespace

ListCheck check_list_report(const FrequencyReport& report, const ExactTally& t, double epsilon,
                            double phi) {
  return check(report, t.counts(), static_cast<double>(t.length()), epsilon, phi);
}

ListCheck check_score_report(const FrequencyReport& report, const std::vector<std::uint64_t>& exact,
                             double unit, double epsilon, double phi) {
  return check(report, exact, unit, epsilon, phi);
}

}  // namespace hh
