#include "hh/universal_hash.hpp"

#include <stdexcept>
#include <string>

namespace hh {

namespace {

void check_shape(std::uint64_t domain, std::uint64_t range) {
  if (domain == 0 || domain > UniversalHash::kPrime) {
    throw std::invalid_argument("UniversalHash: domain must be in [1, 2^61 - 1]");
  }
  if (range == 0) throw std::invalid_argument("UniversalHash: range must be positive");
}

}  // namespace

UniversalHash::UniversalHash(Rng& rng, std::uint64_t domain, std::uint64_t range)
    : domain_(domain), range_(range) {
  check_shape(domain, range);
  a_ = 1 + rng.below(kPrime - 1);
  b_ = rng.below(kPrime);
}

UniversalHash::UniversalHash(std::uint64_t a, std::uint64_t b, std::uint64_t domain,
                             std::uint64_t range)
    : a_(a), b_(b), domain_(domain), range_(range) {
  check_shape(domain, range);
  if (a == 0 || a >= kPrime || b >= kPrime) {
    throw std::invalid_argument("UniversalHash: parameters out of range");
  }
}

std::uint64_t UniversalHash::operator()(std::uint64_t x) const {
  if (x >= domain_) {
    throw std::invalid_argument("UniversalHash: key " + std::to_string(x) +
                                " outside domain of size " + std::to_string(domain_));
  }
  return eval_unchecked(x);
}

}  // namespace hh
