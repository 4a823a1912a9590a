#include "hh/optimal_hh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hh/errors.hpp"
#include "hh/simple_hh.hpp"
#include "hh/space.hpp"

namespace hh {

namespace {

const SketchConfig& checked(const SketchConfig& cfg) {
  validate_list(cfg);
  require_stream_length(cfg, "OptimalHHSketch");
  return cfg;
}

OptimalConstants constants_for(const SketchConfig& cfg) {
  return cfg.scale == 1.0 ? cfg.optimal : cfg.optimal.scaled(cfg.scale);
}

std::size_t column_count(const OptimalConstants& c, double phi) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(c.columns * std::log2(12.0 / phi))));
}

std::size_t row_count(const OptimalConstants& c, double epsilon) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(c.rows / epsilon - 1e-9)));
}

double median_of(std::vector<double>& v) {
  auto mid = v.begin() + static_cast<std::ptrdiff_t>((v.size() - 1) / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

}  // namespace

OptimalHHSketch::OptimalHHSketch(const SketchConfig& cfg)
    : cfg_(checked(cfg)),
      constants_(constants_for(cfg)),
      m_(*cfg.stream_length),
      ell_(cfg.sample_size.value_or(constants_.sample / (cfg.epsilon * cfg.epsilon))),
      rng_(cfg.seed),
      sampler_(PowerOfTwoSampler::for_probability(ell_ / static_cast<double>(m_))),
      table_(reciprocal_ceil(cfg.phi / 2.0)),
      counters_(row_count(constants_, cfg.epsilon), column_count(constants_, cfg.phi), cfg.epsilon,
                constants_.epoch_threshold, cfg.incremental_estimates) {
  hashes_.reserve(counters_.columns());
  for (std::size_t j = 0; j < counters_.columns(); ++j) {
    hashes_.emplace_back(rng_, cfg_.universe, counters_.rows());
  }
}

void OptimalHHSketch::insert(std::uint64_t x) {
  if (x >= cfg_.universe) {
    throw std::invalid_argument("item " + std::to_string(x) + " outside universe of size " +
                                std::to_string(cfg_.universe));
  }
  if (!sampler_.accept(rng_)) return;
  ++samples_;
  table_.insert(x);
  for (std::size_t j = 0; j < hashes_.size(); ++j) {
    counters_.record(static_cast<std::size_t>(hashes_[j].eval_unchecked(x)), j, rng_);
  }
  if (cfg_.space_budget_bits && (samples_ & 1023) == 0 && space_bits() > *cfg_.space_budget_bits) {
    throw SpaceBudgetExceeded("OptimalHHSketch: space budget of " +
                              std::to_string(*cfg_.space_budget_bits) + " bits exceeded");
  }
}

double OptimalHHSketch::estimate_column(std::uint64_t x, std::size_t column) const {
  if (!table_.contains(x)) {
    throw NotCandidateError("item " + std::to_string(x) + " is not a candidate");
  }
  if (column >= hashes_.size()) throw std::invalid_argument("column out of range");
  return counters_.estimate(static_cast<std::size_t>(hashes_[column].eval_unchecked(x)), column);
}

double OptimalHHSketch::estimate(std::uint64_t x) const {
  std::vector<double> per_column(hashes_.size());
  for (std::size_t j = 0; j < hashes_.size(); ++j) per_column[j] = estimate_column(x, j);
  return median_of(per_column);
}

FrequencyReport OptimalHHSketch::report(Scaling scaling) const {
  FrequencyReport out;
  out.samples_seen = samples_;
  out.bits_used = space_bits();
  if (samples_ == 0) return out;
  const double units = scaling == Scaling::kByProbability
                           ? 1.0 / sampler_.probability()
                           : static_cast<double>(m_) / static_cast<double>(samples_);
  const double threshold = (cfg_.phi - cfg_.epsilon / 2.0) * static_cast<double>(samples_);
  for (const auto& [x, value] : table_.entries()) {
    const double f = estimate(x);
    if (f >= threshold) out.items.push_back(ItemEstimate{x, f * units});
  }
  return out;
}

std::uint64_t OptimalHHSketch::space_bits() const {
  std::uint64_t bits = hashes_.size() * UniversalHash::description_bits();
  bits += fixed_width_bits(sampler_.exponent() + 1) + gamma_bits(samples_);
  const std::uint64_t id_bits = fixed_width_bits(cfg_.universe);
  for (const auto& [x, value] : table_.entries()) bits += id_bits + gamma_bits(value);
  bits += table_.capacity() - table_.size();
  bits += counters_.space_bits();
  return bits;
}

}  // namespace hh
