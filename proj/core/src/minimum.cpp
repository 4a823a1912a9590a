#include "hh/minimum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hh/space.hpp"

namespace hh {

const char* to_string(MinimumRule rule) {
  switch (rule) {
    case MinimumRule::kCandidatePool: return "candidate-pool";
    case MinimumRule::kUnsampled: return "unsampled";
    case MinimumRule::kSmallSupport: return "small-support";
    case MinimumRule::kTruncated: return "truncated";
  }
  return "unknown";
}

namespace {

const SketchConfig& checked(const SketchConfig& cfg) {
  validate_common(cfg);
  require_stream_length(cfg, "MinimumSketch");
  return cfg;
}

}  // namespace

MinimumSketch::MinimumSketch(const SketchConfig& cfg)
    : cfg_(checked(cfg)), m_(*cfg.stream_length), rng_(cfg.seed) {
  const double eps = cfg.epsilon;
  const double delta = cfg.delta;
  const double l3_log = std::log(6.0 / (delta * eps));
  ell_[0] = cfg.scale * std::log(6.0 / (eps * delta)) / eps;
  ell_[1] = cfg.scale * std::log(6.0 / delta) / (eps * eps);
  ell_[2] = cfg.scale * std::pow(l3_log, 6) / eps;
  for (int k = 0; k < 3; ++k) {
    samplers_[k] = PowerOfTwoSampler::for_probability(6.0 * ell_[k] / static_cast<double>(m_));
  }
  pool_ = static_cast<std::uint64_t>(std::ceil(1.0 / (delta * eps) - 1e-9));
  distinct_threshold_ = static_cast<std::uint64_t>(std::floor(1.0 / (eps * std::log(1.0 / eps))));
  cap_ = static_cast<std::uint64_t>(std::floor(2.0 * std::pow(std::log(2.0 / (eps * delta)), 7)));
  tiered_ = cfg.universe <= kMaxTieredUniverse || cfg.universe < pool_;
  if (tiered_) {
    presence_.assign(cfg.universe, false);
    seen_.assign(cfg.universe, false);
  }
}

void MinimumSketch::insert(std::uint64_t x) {
  if (x >= cfg_.universe) {
    throw std::invalid_argument("item " + std::to_string(x) + " outside universe of size " +
                                std::to_string(cfg_.universe));
  }
  if (!tiered_) return;
  if (samplers_[0].accept(rng_)) {
    ++samples_[0];
    presence_[x] = true;
  }
  if (!seen_[x]) {
    seen_[x] = true;
    ++distinct_;
  }
  if (distinct_ <= distinct_threshold_ && samplers_[1].accept(rng_)) {
    ++samples_[1];
    ++exact_[x];
  }
  if (samplers_[2].accept(rng_)) {
    ++samples_[2];
    auto& c = capped_[x];
    if (c < cap_) ++c;
  }
}

double MinimumSketch::sample_size(int tier) const { return ell_[tier]; }
double MinimumSketch::probability(int tier) const { return samplers_[tier].probability(); }
std::uint64_t MinimumSketch::samples(int tier) const { return samples_[tier]; }

std::uint64_t MinimumSketch::exact_count(std::uint64_t x) const {
  auto it = exact_.find(x);
  return it == exact_.end() ? 0 : it->second;
}

std::uint64_t MinimumSketch::capped_count(std::uint64_t x) const {
  auto it = capped_.find(x);
  return it == capped_.end() ? 0 : it->second;
}

std::uint64_t MinimumSketch::max_capped_count() const {
  std::uint64_t best = 0;
  for (const auto& [x, c] : capped_) best = std::max(best, c);
  return best;
}

std::uint64_t MinimumSketch::argmin(
    const std::unordered_map<std::uint64_t, std::uint64_t>& counts) const {
  std::uint64_t best_id = 0;
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t x = 0; x < cfg_.universe; ++x) {
    auto it = counts.find(x);
    const std::uint64_t c = it == counts.end() ? 0 : it->second;
    if (c < best) {
      best = c;
      best_id = x;
      if (c == 0) break;
    }
  }
  return best_id;
}

double MinimumSketch::units(int tier, Scaling scaling) const {
  if (scaling == Scaling::kByProbability) return 1.0 / samplers_[tier].probability();
  if (samples_[tier] == 0) return 0.0;
  return static_cast<double>(m_) / static_cast<double>(samples_[tier]);
}

MinimumResult MinimumSketch::report(Scaling scaling) const {
  MinimumResult out;
  if (cfg_.universe >= pool_) {
    // Separate stream so repeated reports agree and inserts are unaffected.
    Rng pick(derive_seed(cfg_.seed, 0x6d696e));
    const std::uint64_t id = pick.below(pool_);
    const double estimate = tiered_ ? static_cast<double>(capped_count(id)) * units(2, scaling) : 0.0;
    out.item = ItemEstimate{id, estimate};
    out.rule = MinimumRule::kCandidatePool;
    return out;
  }
  for (std::uint64_t x = 0; x < cfg_.universe; ++x) {
    if (!presence_[x]) {
      out.item = ItemEstimate{x, 0.0};
      out.rule = MinimumRule::kUnsampled;
      return out;
    }
  }
  if (distinct_ <= distinct_threshold_) {
    const std::uint64_t id = argmin(exact_);
    out.item = ItemEstimate{id, static_cast<double>(exact_count(id)) * units(1, scaling)};
    out.rule = MinimumRule::kSmallSupport;
    return out;
  }
  const std::uint64_t id = argmin(capped_);
  out.item = ItemEstimate{id, static_cast<double>(capped_count(id)) * units(2, scaling)};
  out.rule = MinimumRule::kTruncated;
  return out;
}

std::uint64_t MinimumSketch::space_bits() const {
  std::uint64_t bits = 0;
  for (int k = 0; k < 3; ++k) bits += fixed_width_bits(samplers_[k].exponent() + 1) + gamma_bits(samples_[k]);
  if (!tiered_) return bits + fixed_width_bits(pool_);
  bits += 2 * cfg_.universe;  // presence bits and distinct tracking
  const std::uint64_t id_bits = fixed_width_bits(cfg_.universe);
  for (const auto& [x, c] : exact_) bits += id_bits + gamma_bits(c);
  const std::uint64_t capped_bits = fixed_width_bits(cap_ + 1);
  bits += capped_.size() * (id_bits + capped_bits);
  return bits;
}

}  // namespace hh
