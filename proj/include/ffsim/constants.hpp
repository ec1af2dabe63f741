//------------------------------------------------------------------------------
// ffsim: microscopic nuclear spin flip-flop simulator
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#pragma once

namespace ffsim::constants {

// CODATA 2018. All dipole/rate prefactors pull from here; no inline literals.
inline constexpr double mu0 = 1.25663706212e-6;    // vacuum permeability, N/A^2
inline constexpr double h_planck = 6.62607015e-34; // Planck constant, J s (exact)
inline constexpr double hbar = 1.054571817e-34;    // reduced Planck constant, J s
inline constexpr double pi = 3.14159265358979323846;

}  // namespace ffsim::constants
