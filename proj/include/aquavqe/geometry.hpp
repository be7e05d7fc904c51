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

#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aquavqe/fermion.hpp"

namespace aqv {

using Vec3 = std::array<double, 3>;

/// Symmetric water geometry. O sits at the origin and the hydrogens lie in the
/// xy-plane, mirrored about the y-axis.
struct Geometry {
  double bond_angle;   // degrees
  double bond_length;  // Angstrom
  Vec3 oxygen;
  Vec3 hydrogen1;
  Vec3 hydrogen2;

  bool operator==(const Geometry&) const = default;
};

Geometry build_geometry(double bond_angle_deg, double bond_length_angstrom);

double distance(const Vec3& a, const Vec3& b);
/// Angle a-vertex-b in degrees.
double angle_deg(const Vec3& a, const Vec3& vertex, const Vec3& b);

struct ScanEntry {
  Geometry geometry;
  std::filesystem::path fcidump;
};

struct ScanManifest {
  std::vector<ScanEntry> entries;
  std::string basis = "STO-3G";
  ActiveSpaceSpec active_space = default_water_active_space();
};

/// Parses `<angle_deg> <length_angstrom> <relative path>` records. Relative
/// paths resolve against base_dir. Every referenced file is parsed to confirm
/// it is a readable FCIDUMP.
ScanManifest parse_manifest(std::string_view text,
                            const std::filesystem::path& base_dir);
ScanManifest load_manifest(const std::filesystem::path& path);

}  // namespace aqv
