//------------------------------------------------------------------------------
// ffsim: microscopic nuclear spin flip-flop simulator
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "ffsim/lattice.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ffsim/error.hpp"

namespace ffsim {

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Eigen::Vector3d parse_vec3(const std::string& text, const std::string& where) {
  std::istringstream ss(text);
  Eigen::Vector3d v;
  if (!(ss >> v[0] >> v[1] >> v[2])) throw InputError(where + ": expected three numbers, got '" + text + "'");
  std::string tail;
  if (ss >> tail) throw InputError(where + ": trailing content '" + tail + "'");
  return v;
}

}  // namespace

void LatticeDefinition::validate() const {
  if (cell_volume() <= 0.0) throw InputError("lattice: cell vectors are linearly dependent (volume <= 0)");
  if (sites.empty()) throw InputError("lattice: no sites defined");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& s = sites[i];
    for (int k = 0; k < 3; ++k) {
      if (!(s.fractional[k] >= 0.0 && s.fractional[k] < 1.0))
        throw InputError("lattice: site " + std::to_string(i) + " fractional coordinate out of [0,1)");
    }
    if (s.orientation_class < 0 || s.orientation_class > 3)
      throw InputError("lattice: site " + std::to_string(i) + " orientation_class out of 0..3");
  }
}

LatticeDefinition parse_lattice(std::istream& in, const std::string& origin) {
  LatticeDefinition lat;
  bool have_version = false, have_a = false, have_b = false, have_c = false;
  bool in_sites = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    if (line == "[sites]") {
      in_sites = true;
      continue;
    }
    if (in_sites) {
      std::istringstream ss(line);
      LatticeSite s;
      if (!(ss >> s.fractional[0] >> s.fractional[1] >> s.fractional[2] >> s.orientation_class >> s.site_label))
        throw InputError(where + ": expected 'fx fy fz orientation_class site_label'");
      std::string tail;
      if (ss >> tail) throw InputError(where + ": trailing content '" + tail + "'");
      lat.sites.push_back(s);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(where + ": expected 'key = value'");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key == "format_version") {
      if (value != "1") throw InputError(where + ": unsupported format_version '" + value + "'");
      have_version = true;
    } else if (key == "cell_a_nm") {
      lat.cell.row(0) = parse_vec3(value, where);
      have_a = true;
    } else if (key == "cell_b_nm") {
      lat.cell.row(1) = parse_vec3(value, where);
      have_b = true;
    } else if (key == "cell_c_nm") {
      lat.cell.row(2) = parse_vec3(value, where);
      have_c = true;
    } else {
      throw InputError(where + ": unknown key '" + key + "'");
    }
  }
  if (!have_version) throw InputError(origin + ": missing format_version");
  if (!have_a || !have_b || !have_c) throw InputError(origin + ": missing cell vector(s)");
  lat.validate();
  return lat;
}

LatticeDefinition load_lattice(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open lattice file '" + path + "'");
  return parse_lattice(f, path);
}

void write_lattice(const LatticeDefinition& lattice, std::ostream& out) {
  out << "# Explicit-site lattice, D1/D2/b frame. Cell vectors in nm; sites are\n"
         "# fractional coordinates of the cell vectors.\n";
  out << "format_version = 1\n";
  char buf[128];
  for (int r = 0; r < 3; ++r) {
    std::snprintf(buf, sizeof buf, "cell_%c_nm = %.9g %.9g %.9g\n", "abc"[r], lattice.cell(r, 0), lattice.cell(r, 1),
                  lattice.cell(r, 2));
    out << buf;
  }
  out << "[sites]\n# fx fy fz orientation_class site_label\n";
  for (const auto& s : lattice.sites) {
    std::snprintf(buf, sizeof buf, "%.9g %.9g %.9g %d %d\n", s.fractional[0], s.fractional[1], s.fractional[2],
                  s.orientation_class, s.site_label);
    out << buf;
  }
}

LatticeDefinition demo_y2sio5_lattice() {
  // Monoclinic C2/c yttrium sublattice: a = 1.0410 nm, b = 0.6721 nm,
  // c = 1.2490 nm, beta = 102.65 deg, eight yttrium positions per cell and
  // crystallographic site (Wyckoff 8f). Frame: b along z, a along x, c in
  // the x-y plane. Assembled from published crystallographic data.
  LatticeDefinition lat;
  const double a = 1.0410, b = 0.6721, c = 1.2490;
  const double beta = deg2rad_(102.65);
  lat.cell.row(0) << a, 0.0, 0.0;
  lat.cell.row(1) << 0.0, 0.0, b;
  lat.cell.row(2) << c * std::cos(beta), c * std::sin(beta), 0.0;

  auto add_8f = [&lat](double x, double y, double z, int label) {
    // C2/c general positions grouped by tensor orientation: identity and
    // inversion share a class pair (rank-2 tensors are inversion-even),
    // the two-fold/glide images carry the C2(b)-rotated class pair.
    const double img[4][3] = {{x, y, z}, {-x, y, 0.5 - z}, {-x, -y, -z}, {x, -y, 0.5 + z}};
    auto wrap = [](double f) {
      f = std::fmod(f, 1.0);
      return f < 0.0 ? f + 1.0 : f;
    };
    for (int k = 0; k < 4; ++k) {
      for (int centering = 0; centering < 2; ++centering) {
        LatticeSite s;
        s.fractional << wrap(img[k][0] + 0.5 * centering), wrap(img[k][1] + 0.5 * centering), wrap(img[k][2]);
        s.orientation_class = k;
        s.site_label = label;
        lat.sites.push_back(s);
      }
    }
  };
  add_8f(0.14244, 0.62266, 0.35461, 1);
  add_8f(0.02746, 0.75060, 0.09372, 2);
  lat.validate();
  return lat;
}

}  // namespace ffsim
