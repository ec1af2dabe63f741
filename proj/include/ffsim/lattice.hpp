//------------------------------------------------------------------------------
// ffsim: microscopic nuclear spin flip-flop simulator
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

namespace ffsim {

struct LatticeSite {
  Eigen::Vector3d fractional;  // components in [0, 1)
  int orientation_class = 0;   // 0..3
  int site_label = 1;          // crystallographic site id
};

// Explicit-site lattice in the D1/D2/b crystal frame. Row k of `cell` is the
// k-th cell vector in nm; site positions are fractional combinations of the
// rows. No space-group expansion happens here: the file lists every site.
struct LatticeDefinition {
  Eigen::Matrix3d cell = Eigen::Matrix3d::Zero();
  std::vector<LatticeSite> sites;

  double cell_volume() const { return std::abs(cell.determinant()); }
  void validate() const;  // throws InputError on any violated invariant
};

/// Parse a lattice file. Strict: unknown keys are rejected.
LatticeDefinition load_lattice(const std::string& path);
LatticeDefinition parse_lattice(std::istream& in, const std::string& origin);

void write_lattice(const LatticeDefinition& lattice, std::ostream& out);

/// Built-in demo: the Y2SiO5 yttrium sublattice (both crystallographic sites,
/// four orientation classes). Matches the bundled data file.
LatticeDefinition demo_y2sio5_lattice();

}  // namespace ffsim
