//------------------------------------------------------------------------------
// ffsim: microscopic nuclear spin flip-flop simulator
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "ffsim/geometry.hpp"

#include <cmath>

namespace ffsim {

Eigen::Matrix3d euler_zyz(double alpha, double beta, double gamma) {
  auto rz = [](double t) {
    Eigen::Matrix3d m;
    m << std::cos(t), -std::sin(t), 0.0, std::sin(t), std::cos(t), 0.0, 0.0, 0.0, 1.0;
    return m;
  };
  auto ry = [](double t) {
    Eigen::Matrix3d m;
    m << std::cos(t), 0.0, std::sin(t), 0.0, 1.0, 0.0, -std::sin(t), 0.0, std::cos(t);
    return m;
  };
  return rz(alpha) * ry(beta) * rz(gamma);
}

}  // namespace ffsim
