#include "hh/simple_hh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hh/errors.hpp"
#include "hh/space.hpp"

namespace hh {

std::size_t reciprocal_ceil(double x) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(1.0 / x - 1e-9)));
}

namespace {

const SketchConfig& checked(const SketchConfig& cfg, SimpleHHSketch::Mode mode) {
  if (mode == SimpleHHSketch::Mode::kList) {
    validate_list(cfg);
  } else {
    validate_common(cfg);
  }
  require_stream_length(cfg, "SimpleHHSketch");
  return cfg;
}

double sample_size_for(const SketchConfig& cfg) {
  if (cfg.sample_size) return *cfg.sample_size;
  return cfg.scale * 6.0 * std::log2(6.0 / cfg.delta) / (cfg.epsilon * cfg.epsilon);
}

std::uint64_t hash_range_for(double ell, double delta) {
  const double r = std::ceil(4.0 * ell * ell / delta);
  if (r >= 0x1.0p63) return std::uint64_t{1} << 63;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(r));
}

}  // namespace

SimpleHHSketch::SimpleHHSketch(const SketchConfig& cfg, Mode mode)
    : cfg_(checked(cfg, mode)),
      mode_(mode),
      m_(*cfg.stream_length),
      ell_(sample_size_for(cfg)),
      rng_(cfg.seed),
      hash_(rng_, cfg.universe, hash_range_for(ell_, cfg.delta)),
      sampler_(PowerOfTwoSampler::for_probability(6.0 * ell_ / static_cast<double>(m_))),
      table_(reciprocal_ceil(cfg.epsilon)),
      top_(mode == Mode::kList ? std::min(reciprocal_ceil(cfg.phi), table_.capacity()) : 1) {
  tracked_.reserve(top_);
}

void SimpleHHSketch::insert(std::uint64_t x) {
  if (x >= cfg_.universe) {
    throw std::invalid_argument("item " + std::to_string(x) + " outside universe of size " +
                                std::to_string(cfg_.universe));
  }
  if (!sampler_.accept(rng_)) return;
  ++samples_;
  const std::uint64_t key = hash_.eval_unchecked(x);
  const auto result = table_.insert(key);
  if (mode_ == Mode::kList) {
    track_list(x, key, result);
  } else {
    track_max(x, key, result);
  }
}

bool SimpleHHSketch::ranks_before(const Tracked& a, const Tracked& b) const {
  const std::uint64_t va = table_.estimate(a.key);
  const std::uint64_t vb = table_.estimate(b.key);
  return va != vb ? va > vb : a.key < b.key;
}

void SimpleHHSketch::track_list(std::uint64_t x, std::uint64_t key,
                                CounterTable::InsertResult result) {
  if (result == CounterTable::InsertResult::kDecrementedAll) {
    // Order is preserved; only keys that dropped to zero leave.
    std::erase_if(tracked_, [&](const Tracked& t) { return !table_.contains(t.key); });
    return;
  }
  if (table_.rank(key, top_) < 0) return;

  auto pos = std::find_if(tracked_.begin(), tracked_.end(),
                          [&](const Tracked& t) { return t.key == key; });
  if (pos == tracked_.end()) {
    // h(x) entered the top set, displacing the previous last entry if full.
    if (tracked_.size() == top_) tracked_.pop_back();
    tracked_.push_back(Tracked{x, key});
    pos = tracked_.end() - 1;
  }
  // Only this key's value grew, so it can only move towards the front.
  while (pos != tracked_.begin() && ranks_before(*pos, *(pos - 1))) {
    std::iter_swap(pos, pos - 1);
    --pos;
  }
}

void SimpleHHSketch::track_max(std::uint64_t x, std::uint64_t key,
                               CounterTable::InsertResult result) {
  if (result == CounterTable::InsertResult::kDecrementedAll) {
    if (max_ && !table_.contains(max_->key)) max_.reset();
    return;
  }
  if (!max_) {
    max_ = Tracked{x, key};
    return;
  }
  if (max_->key == key) return;
  const std::uint64_t v = table_.estimate(key);
  const std::uint64_t current = table_.estimate(max_->key);
  if (v > current || (v == current && x < max_->id)) max_ = Tracked{x, key};
}

double SimpleHHSketch::units_per_sample(Scaling scaling) const {
  if (scaling == Scaling::kByProbability) return 1.0 / sampler_.probability();
  return samples_ == 0 ? 0.0 : static_cast<double>(m_) / static_cast<double>(samples_);
}

double SimpleHHSketch::centred(std::uint64_t key) const {
  // Misra-Gries undercounts by between 0 and decrements(); report the middle.
  return static_cast<double>(table_.estimate(key)) + 0.5 * static_cast<double>(table_.decrements());
}

FrequencyReport SimpleHHSketch::report(Scaling scaling) const {
  if (mode_ != Mode::kList) throw std::logic_error("SimpleHHSketch::report needs list mode");
  FrequencyReport out;
  out.samples_seen = samples_;
  out.bits_used = space_bits();
  if (samples_ == 0) return out;
  const double threshold = (cfg_.phi - cfg_.epsilon / 2.0) * static_cast<double>(samples_);
  const double units = units_per_sample(scaling);
  for (const auto& t : tracked_) {
    const double c = centred(t.key);
    if (c >= threshold) out.items.push_back(ItemEstimate{t.id, c * units});
  }
  return out;
}

ItemEstimate SimpleHHSketch::max_report(Scaling scaling) const {
  if (mode_ != Mode::kMaximum) throw std::logic_error("SimpleHHSketch::max_report needs maximum mode");
  if (samples_ == 0 || !max_) throw NoSampleError("maximum: no element was sampled");
  return ItemEstimate{max_->id, centred(max_->key) * units_per_sample(scaling)};
}

bool SimpleHHSketch::check_consistency() const {
  if (mode_ != Mode::kList) return true;
  const auto top = table_.top(std::min(top_, table_.size()));
  if (top.size() != tracked_.size()) return false;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (top[i].first != tracked_[i].key || hash_.eval_unchecked(tracked_[i].id) != tracked_[i].key) {
      return false;
    }
  }
  return true;
}

std::uint64_t SimpleHHSketch::space_bits() const {
  std::uint64_t bits = UniversalHash::description_bits();
  bits += fixed_width_bits(sampler_.exponent() + 1);
  bits += gamma_bits(samples_) + gamma_bits(table_.decrements());
  const std::uint64_t key_bits = fixed_width_bits(hash_.range());
  for (const auto& [key, value] : table_.entries()) bits += key_bits + gamma_bits(value);
  bits += table_.capacity() - table_.size();
  const std::uint64_t id_bits = fixed_width_bits(cfg_.universe);
  const std::size_t ids = mode_ == Mode::kList ? tracked_.size() : (max_ ? 1 : 0);
  bits += ids * id_bits + (top_ - ids);
  return bits;
}

}  // namespace hh
