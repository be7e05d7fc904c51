// Copyright 2026 The aquavqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aquavqe/geometry.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "aquavqe/error.hpp"

namespace aqv {

Geometry build_geometry(double bond_angle_deg, double bond_length_angstrom) {
  if (!(bond_angle_deg > 0.0 && bond_angle_deg <= 180.0))
    fail(ErrorKind::kDomain, "bond angle must lie in (0, 180] degrees");
  if (!(bond_length_angstrom > 0.0) || !std::isfinite(bond_length_angstrom))
    fail(ErrorKind::kDomain, "bond length must be positive");
  const double half = bond_angle_deg * std::numbers::pi / 360.0;
  const double r = bond_length_angstrom;
  // cos(pi/2) is not exactly zero in floating point.
  const double y = bond_angle_deg == 180.0 ? 0.0 : r * std::cos(half);
  const double x = r * std::sin(half);
  return {bond_angle_deg, r, {0.0, 0.0, 0.0}, {x, y, 0.0}, {-x, y, 0.0}};
}

double distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

double angle_deg(const Vec3& a, const Vec3& vertex, const Vec3& b) {
  Vec3 u{a[0] - vertex[0], a[1] - vertex[1], a[2] - vertex[2]};
  Vec3 v{b[0] - vertex[0], b[1] - vertex[1], b[2] - vertex[2]};
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  const Vec3 cross{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                   u[0] * v[1] - u[1] * v[0]};
  const double sin_part = std::hypot(cross[0], cross[1], cross[2]);
  return std::atan2(sin_part, dot) * 180.0 / std::numbers::pi;
}

ScanManifest parse_manifest(std::string_view text,
                            const std::filesystem::path& base_dir) {
  ScanManifest manifest;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::set<std::pair<double, double>> seen_geometry;
  std::set<std::filesystem::path> seen_path;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    double angle = 0.0, length = 0.0;
    std::string rel;
    if (!(fields >> angle)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fail(ErrorKind::kParse,
           "manifest line " + std::to_string(line_no) + ": bad angle");
    }
    if (!(fields >> length >> rel))
      fail(ErrorKind::kParse, "manifest line " + std::to_string(line_no) +
                                  ": expected '<angle> <length> <path>'");
    std::string extra;
    if (fields >> extra)
      fail(ErrorKind::kParse, "manifest line " + std::to_string(line_no) +
                                  ": trailing field '" + extra + "'");
    auto geometry = build_geometry(angle, length);
    if (!seen_geometry.emplace(angle, length).second)
      fail(ErrorKind::kValidation,
           "manifest line " + std::to_string(line_no) +
               ": duplicate geometry (" + std::to_string(angle) + ", " +
               std::to_string(length) + ")");
    auto path = (base_dir / rel).lexically_normal();
    if (!seen_path.insert(path).second)
      fail(ErrorKind::kValidation, "manifest line " + std::to_string(line_no) +
                                       ": duplicate path " + path.string());
    if (!std::filesystem::exists(path))
      fail(ErrorKind::kIo, "missing FCIDUMP file '" + path.string() + "'");
    load_fcidump(path.string());
    manifest.entries.push_back({geometry, path});
  }
  if (manifest.entries.empty())
    fail(ErrorKind::kValidation, "manifest lists no geometries to scan");
  return manifest;
}

ScanManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open manifest '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str(), path.parent_path());
}

}  // namespace aqv
