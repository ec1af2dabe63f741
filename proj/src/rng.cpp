//------------------------------------------------------------------------------
// ffsim: microscopic nuclear spin flip-flop simulator
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "ffsim/rng.hpp"

#include <cmath>

#include "ffsim/constants.hpp"
#include "ffsim/error.hpp"

namespace ffsim {

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  if (n == 0) throw InputError("uniform_index: n must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_positive();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * constants::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t Rng::poisson(double mean) {
  if (mean < 0.0 || !std::isfinite(mean)) throw InputError("poisson: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  // Knuth's product method underflows for large means; split additively
  // into chunks with mean <= 25 (Poisson sums are Poisson).
  std::uint64_t total = 0;
  double remaining = mean;
  while (remaining > 0.0) {
    const double chunk = remaining > 25.0 ? 25.0 : remaining;
    remaining -= chunk;
    const double threshold = std::exp(-chunk);
    std::uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform_positive();
    } while (p > threshold);
    total += k - 1;
  }
  return total;
}

}  // namespace ffsim
