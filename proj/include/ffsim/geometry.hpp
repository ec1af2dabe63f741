//------------------------------------------------------------------------------
// ffsim: microscopic nuclear spin flip-flop simulator
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#pragma once

#include <Eigen/Dense>

namespace ffsim {

/// Active ZYZ rotation: R(alpha, beta, gamma) = Rz(alpha) * Ry(beta) * Rz(gamma).
/// This is the convention for every Euler triple in ffsim configs.
Eigen::Matrix3d euler_zyz(double alpha, double beta, double gamma);

inline double deg_to_rad(double deg) { return deg * 3.14159265358979323846 / 180.0; }

}  // namespace ffsim
