#include "hh/voting.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hh/errors.hpp"
#include "hh/space.hpp"

namespace hh {

Ranking::Ranking(std::vector<std::uint32_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (auto c : order_) {
    if (c >= order_.size()) {
      throw std::invalid_argument("ranking: candidate " + std::to_string(c) + " out of range for " +
                                  std::to_string(order_.size()) + " candidates");
    }
    if (seen[c]) throw std::invalid_argument("ranking: candidate " + std::to_string(c) + " repeated");
    seen[c] = true;
  }
}

Ranking Ranking::parse(std::string_view text) {
  std::vector<std::uint32_t> order;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    std::uint32_t id = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), id);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw std::invalid_argument("ranking: bad candidate id '" + std::string(field) + "'");
    }
    order.push_back(id);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Ranking(std::move(order));
}

namespace {

const SketchConfig& checked(const SketchConfig& cfg, const char* who) {
  validate_common(cfg);
  require_stream_length(cfg, who);
  if (cfg.universe > UINT32_MAX) throw std::invalid_argument(std::string(who) + ": too many candidates");
  return cfg;
}

void check_size(const Ranking& r, std::uint64_t n) {
  if (r.size() != n) {
    throw std::invalid_argument("ranking lists " + std::to_string(r.size()) + " candidates, expected " +
                                std::to_string(n));
  }
}

void check_phi(const SketchConfig& cfg) {
  if (!(cfg.phi > cfg.epsilon) || cfg.phi > 1.0) {
    throw std::invalid_argument("list modes need 0 < epsilon < phi <= 1");
  }
}

ItemEstimate argmax(const std::vector<double>& scores) {
  ItemEstimate best{0, scores.front()};
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > best.estimate) best = ItemEstimate{i, scores[i]};
  }
  return best;
}

}  // namespace

BordaSketch::BordaSketch(const SketchConfig& cfg)
    : cfg_(checked(cfg, "BordaSketch")),
      m_(*cfg.stream_length),
      ell_(cfg.sample_size.value_or(cfg.scale * 6.0 *
                                    std::log2(6.0 * static_cast<double>(cfg.universe) / cfg.delta) /
                                    (cfg.epsilon * cfg.epsilon))),
      rng_(cfg.seed),
      sampler_(PowerOfTwoSampler::for_probability(6.0 * ell_ / static_cast<double>(m_))),
      raw_(cfg.universe, 0) {}

void BordaSketch::insert(const Ranking& r) {
  check_size(r, cfg_.universe);
  if (!sampler_.accept(rng_)) return;
  ++samples_;
  const std::size_t n = r.size();
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    raw_[r[k]] += n - 1 - k;
    total += n - 1 - k;
  }
  if (total != n * (n - 1) / 2) throw std::logic_error("BordaSketch: per-vote increments do not sum to n(n-1)/2");
}

double BordaSketch::units(Scaling scaling) const {
  if (scaling == Scaling::kByProbability) return 1.0 / sampler_.probability();
  return static_cast<double>(m_) / static_cast<double>(samples_);
}

std::vector<double> BordaSketch::scores(Scaling scaling) const {
  if (samples_ == 0) throw NoSampleError("BordaSketch: no vote was sampled");
  const double u = units(scaling);
  std::vector<double> out(raw_.size());
  for (std::size_t i = 0; i < raw_.size(); ++i) out[i] = static_cast<double>(raw_[i]) * u;
  return out;
}

FrequencyReport BordaSketch::report(Scaling scaling) const {
  check_phi(cfg_);
  const auto s = scores(scaling);
  FrequencyReport out;
  out.samples_seen = samples_;
  out.bits_used = space_bits();
  const double threshold = (cfg_.phi - cfg_.epsilon / 2.0) * static_cast<double>(samples_) *
                           static_cast<double>(cfg_.universe);
  for (std::size_t i = 0; i < raw_.size(); ++i) {
    if (static_cast<double>(raw_[i]) >= threshold) out.items.push_back(ItemEstimate{i, s[i]});
  }
  return out;
}

ItemEstimate BordaSketch::winner(Scaling scaling) const { return argmax(scores(scaling)); }

std::uint64_t BordaSketch::space_bits() const {
  std::uint64_t bits = fixed_width_bits(sampler_.exponent() + 1) + gamma_bits(samples_);
  for (auto v : raw_) bits += gamma_bits(v);
  return bits;
}

MaximinSketch::MaximinSketch(const SketchConfig& cfg)
    : cfg_(checked(cfg, "MaximinSketch")),
      m_(*cfg.stream_length),
      ell_(cfg.sample_size.value_or(cfg.scale * 8.0 *
                                    std::log(6.0 * static_cast<double>(cfg.universe) / cfg.delta) /
                                    (cfg.epsilon * cfg.epsilon))),
      rng_(cfg.seed),
      sampler_(PowerOfTwoSampler::for_probability(6.0 * ell_ / static_cast<double>(m_))) {}

void MaximinSketch::insert(const Ranking& r) {
  check_size(r, cfg_.universe);
  if (!sampler_.accept(rng_)) return;
  ++samples_;
  votes_.insert(votes_.end(), r.order().begin(), r.order().end());
}

std::vector<std::uint64_t> MaximinSketch::pairwise() const {
  const std::size_t n = cfg_.universe;
  std::vector<std::uint64_t> d(n * n, 0);
  for (std::size_t v = 0; v < samples_; ++v) {
    const std::uint32_t* vote = votes_.data() + v * n;
    for (std::size_t a = 0; a < n; ++a) {
      std::uint64_t* row = d.data() + static_cast<std::size_t>(vote[a]) * n;
      for (std::size_t b = a + 1; b < n; ++b) ++row[vote[b]];
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (d[x * n + y] + d[y * n + x] != samples_) {
        throw std::logic_error("MaximinSketch: pairwise counts do not cover every stored vote");
      }
    }
  }
  return d;
}

double MaximinSketch::units(Scaling scaling) const {
  if (scaling == Scaling::kByProbability) return 1.0 / sampler_.probability();
  return samples_ == 0 ? 0.0 : static_cast<double>(m_) / static_cast<double>(samples_);
}

std::vector<std::uint64_t> MaximinSketch::raw_scores() const {
  if (samples_ == 0) throw NoSampleError("MaximinSketch: no vote was sampled");
  const std::size_t n = cfg_.universe;
  if (n < 2) throw UndefinedMaximinError("maximin needs at least two candidates");
  const auto d = pairwise();
  std::vector<std::uint64_t> out(n, UINT64_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x) out[x] = std::min(out[x], d[x * n + y]);
    }
  }
  return out;
}

std::vector<double> MaximinSketch::scores(Scaling scaling) const {
  const auto raw = raw_scores();
  const double u = units(scaling);
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = static_cast<double>(raw[i]) * u;
  return out;
}

FrequencyReport MaximinSketch::report(Scaling scaling) const {
  check_phi(cfg_);
  const auto raw = raw_scores();
  const double u = units(scaling);
  FrequencyReport out;
  out.samples_seen = samples_;
  out.bits_used = space_bits();
  const double threshold = (cfg_.phi - cfg_.epsilon / 2.0) * static_cast<double>(samples_);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (static_cast<double>(raw[i]) >= threshold) {
      out.items.push_back(ItemEstimate{i, static_cast<double>(raw[i]) * u});
    }
  }
  return out;
}

ItemEstimate MaximinSketch::winner(Scaling scaling) const { return argmax(scores(scaling)); }

std::uint64_t MaximinSketch::space_bits() const {
  return fixed_width_bits(sampler_.exponent() + 1) + gamma_bits(samples_) +
         votes_.size() * fixed_width_bits(cfg_.universe);
}

}  // namespace hh
