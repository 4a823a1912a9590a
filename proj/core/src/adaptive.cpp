#include "hh/adaptive.hpp"

#include <algorithm>
#include <cmath>

namespace hh {

SketchConfig generation_config(const SketchConfig& cfg, int generation, int length_offset,
                               std::optional<double> sample_size) {
  SketchConfig out = cfg;
  out.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(generation));
  const double length = std::min(std::ceil(std::pow(1.0 / cfg.epsilon, generation + length_offset) - 1e-6),
                                 0x1p62);
  out.stream_length = static_cast<std::uint64_t>(length);
  out.sample_size = sample_size;
  return out;
}

double adaptive_sample_size(const SketchConfig& cfg) {
  const double eps = cfg.epsilon;
  return cfg.sample_size.value_or(cfg.scale * std::log2(6.0 / cfg.delta) / (eps * eps * eps));
}

AdaptiveSketch<SimpleHHSketch> make_adaptive_heavy_hitters(const SketchConfig& cfg,
                                                          SimpleHHSketch::Mode mode,
                                                          AdaptiveOptions options) {
  if (mode == SimpleHHSketch::Mode::kList) {
    validate_list(cfg);
  } else {
    validate_common(cfg);
  }
  const double ell = adaptive_sample_size(cfg);
  return AdaptiveSketch<SimpleHHSketch>(
      cfg.epsilon, cfg.delta, cfg.seed,
      [cfg, ell, mode](int g) { return SimpleHHSketch(generation_config(cfg, g, 2, ell), mode); }, options);
}

AdaptiveSketch<MinimumSketch> make_adaptive_minimum(const SketchConfig& cfg, AdaptiveOptions options) {
  validate_common(cfg);
  return AdaptiveSketch<MinimumSketch>(
      cfg.epsilon, cfg.delta, cfg.seed,
      [cfg](int g) { return MinimumSketch(generation_config(cfg, g, 1, cfg.sample_size)); }, options);
}

AdaptiveSketch<BordaSketch> make_adaptive_borda(const SketchConfig& cfg, AdaptiveOptions options) {
  validate_common(cfg);
  return AdaptiveSketch<BordaSketch>(
      cfg.epsilon, cfg.delta, cfg.seed,
      [cfg](int g) { return BordaSketch(generation_config(cfg, g, 1, cfg.sample_size)); }, options);
}

AdaptiveSketch<MaximinSketch> make_adaptive_maximin(const SketchConfig& cfg, AdaptiveOptions options) {
  validate_common(cfg);
  return AdaptiveSketch<MaximinSketch>(
      cfg.epsilon, cfg.delta, cfg.seed,
      [cfg](int g) { return MaximinSketch(generation_config(cfg, g, 1, cfg.sample_size)); }, options);
}

}  // namespace hh
