#include "hh/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hh {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Rejection on the top of the range keeps the result exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::uint64_t Rng::geometric(double q) {
  if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("Rng::geometric: q must be in (0, 1]");
  if (q == 1.0) return 1;
  // Inversion: P(G > k) = (1 - q)^k.
  double u = uniform01();
  while (u == 0.0) u = uniform01();
  const double g = std::floor(std::log(u) / std::log1p(-q)) + 1.0;
  if (g >= 0x1.0p63) return std::uint64_t{1} << 63;
  return static_cast<std::uint64_t>(g);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hh
