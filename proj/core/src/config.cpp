#include "hh/config.hpp"

#include <stdexcept>
#include <string>

namespace hh {

OptimalConstants OptimalConstants::scaled(double factor) const {
  if (!(factor > 0.0) || factor > 1.0) {
    throw std::invalid_argument("OptimalConstants::scaled: factor must be in (0, 1]");
  }
  OptimalConstants out = *this;
  out.sample *= factor;
  out.columns *= factor;
  out.epoch_threshold *= factor;
  return out;
}

void validate_common(const SketchConfig& cfg) {
  if (!(cfg.epsilon > 0.0) || !(cfg.epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1)");
  }
  if (!(cfg.delta > 0.0) || !(cfg.delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
  if (cfg.universe == 0) throw std::invalid_argument("universe size n must be positive");
  if (!(cfg.scale > 0.0) || cfg.scale > 1.0) throw std::invalid_argument("scale must be in (0, 1]");
  if (cfg.stream_length && *cfg.stream_length == 0) {
    throw std::invalid_argument("stream length m must be positive when given");
  }
  if (cfg.sample_size && !(*cfg.sample_size > 0.0)) {
    throw std::invalid_argument("sample size override must be positive");
  }
}

void validate_list(const SketchConfig& cfg) {
  validate_common(cfg);
  if (!(cfg.phi > cfg.epsilon) || cfg.phi > 1.0) {
    throw std::invalid_argument("list modes need 0 < epsilon < phi <= 1");
  }
}

std::uint64_t require_stream_length(const SketchConfig& cfg, const char* who) {
  if (!cfg.stream_length) {
    throw std::invalid_argument(std::string(who) + ": stream length m is required");
  }
  return *cfg.stream_length;
}

}  // namespace hh
