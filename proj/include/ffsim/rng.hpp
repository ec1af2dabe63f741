//------------------------------------------------------------------------------
// ffsim: microscopic nuclear spin flip-flop simulator
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <random>

namespace ffsim {

// Deterministic RNG. mt19937_64 raw output is pinned by the C++ standard,
// but the std::*_distribution adapters are not, so every variate transform
// is implemented here explicitly. Same seed -> same byte-identical stream
// on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1].
  double uniform_positive() { return 1.0 - uniform(); }

  /// Unbiased integer in [0, n), rejection-sampled.
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal via Box-Muller (pairs cached).
  double gaussian();

  /// Poisson variate; exact for any mean via additive splitting.
  std::uint64_t poisson(double mean);

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ffsim
