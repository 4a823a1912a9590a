#include "hh/workload.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hh {

ZipfDistribution::ZipfDistribution(std::uint64_t n, double exponent) : cdf_(n) {
  if (n == 0) throw std::invalid_argument("ZipfDistribution: n must be positive");
  if (!(exponent >= 0.0)) throw std::invalid_argument("ZipfDistribution: exponent must be non-negative");
  double total = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    total += std::pow(static_cast<double>(i + 1), -exponent);
    cdf_[i] = total;
  }
  for (auto& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

std::uint64_t ZipfDistribution::operator()(Rng& rng) const {
  const double u = rng.uniform01();
  return static_cast<std::uint64_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
}

double ZipfDistribution::probability(std::uint64_t i) const {
  return i == 0 ? cdf_[0] : cdf_.at(i) - cdf_[i - 1];
}

std::vector<std::uint64_t> zipf_stream(std::uint64_t n, double exponent, std::uint64_t m,
                                       std::uint64_t seed) {
  ZipfDistribution zipf(n, exponent);
  Rng rng(seed);
  std::vector<std::uint64_t> out(m);
  for (auto& x : out) x = zipf(rng);
  return out;
}

std::vector<std::uint64_t> uniform_stream(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint64_t> out(m);
  for (auto& x : out) x = rng.below(n);
  return out;
}

Ranking random_ranking(std::uint32_t n, Rng& rng) {
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  for (std::uint32_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  return Ranking(std::move(order));
}

std::vector<Ranking> clustered_votes(std::uint32_t n, std::uint64_t m, std::uint64_t seed,
                                     std::uint32_t clusters) {
  if (clusters == 0) throw std::invalid_argument("clustered_votes: need at least one cluster");
  Rng rng(seed);
  std::vector<Ranking> refs;
  for (std::uint32_t c = 0; c < clusters; ++c) refs.push_back(random_ranking(n, rng));
  ZipfDistribution pick(clusters, 1.0);
  std::vector<Ranking> out;
  out.reserve(m);
  std::vector<std::uint32_t> order;
  for (std::uint64_t v = 0; v < m; ++v) {
    order = refs[pick(rng)].order();
    if (n > 1) {
      for (std::uint32_t s = 0; s < n / 2; ++s) {
        const auto k = rng.below(n - 1);
        std::swap(order[k], order[k + 1]);
      }
    }
    out.emplace_back(order);
  }
  return out;
}

}  // namespace hh
