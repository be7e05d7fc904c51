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
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aquavqe/geometry.hpp"
#include "aquavqe/spsa.hpp"
#include "aquavqe/vqe.hpp"

namespace aqv {

struct PESRecord {
  Geometry geometry;
  double vqe_energy = 0.0;
  double exact_energy = 0.0;
  double delta = 0.0;
  ProbabilityDiagnostics diagnostics;
  std::vector<double> params;
};

struct ScanFailure {
  Geometry geometry;
  std::string message;
};

struct ScanOptions {
  std::size_t layers = 2;
  SPSAConfig spsa;
  std::optional<std::size_t> sector;
  bool keep_going = false;
  std::size_t jobs = 1;
  VQEOptions vqe;
};

struct ScanResult {
  std::vector<PESRecord> records;  // manifest order
  std::vector<ScanFailure> failures;
};

/// Runs exact diagonalization and a warm-started VQE at every manifest entry.
/// Entry i optimizes with seed derive_seed(options.spsa.seed, i), so results
/// do not depend on the number of jobs.
ScanResult scan(const ScanManifest& manifest, std::span<const double> warm_params,
                const ScanOptions& options);

struct SurfacePoint {
  double angle;   // degrees
  double length;  // Angstrom
  double energy;  // Hartree
};

/// E(x, y) = c0 + sum_p a_p x^-p + sum_p b_p y^-p, p in {2, 3, 4, 4.5}.
struct SurfaceFit {
  static constexpr std::array<double, 4> kPowers{2.0, 3.0, 4.0, 4.5};

  double intercept = 0.0;
  std::array<double, 4> angle_coefficients{};
  std::array<double, 4> length_coefficients{};
  double residual_rms = 0.0;
  std::size_t n_points = 0;
  double angle_min = 0.0, angle_max = 0.0;
  double length_min = 0.0, length_max = 0.0;

  double angle_part(double x) const;
  double length_part(double y) const;
  double evaluate(double x, double y) const {
    return intercept + angle_part(x) + length_part(y);
  }
};

/// Ordinary least squares through a column-pivoted Householder QR of the
/// column-equilibrated design matrix.
SurfaceFit fit_surface(std::span<const SurfacePoint> points);

struct Interval {
  double lo;
  double hi;
};

struct SurfaceMinimum {
  double angle_star = 0.0;
  double length_star = 0.0;
  double energy_star = 0.0;
  bool angle_at_boundary = false;
  bool length_at_boundary = false;
};

/// Golden-section search on [lo, hi] down to bracket width tol.
double golden_section_minimize(const std::function<double(double)>& f,
                               double lo, double hi, double tol = 1e-6);

/// Minimizes each separable section over a 1000-point grid, then refines the
/// grid minimum by golden section. A minimum on the range edge is flagged.
SurfaceMinimum minimize_surface(const SurfaceFit& fit, Interval angle_range,
                                Interval length_range);
SurfaceMinimum minimize_surface(const SurfaceFit& fit);

/// Writes <prefix>.csv and, when a fit is given, <prefix>.json.
void emit_pes(std::span<const PESRecord> records, const SurfaceFit* fit,
              const SurfaceMinimum* minimum, const std::filesystem::path& prefix);
std::string pes_csv(std::span<const PESRecord> records);
/// Per-entry records with parameters, failures and the settings used.
std::string scan_json(const ScanResult& result, const ScanOptions& options);

/// Reads `angle_deg,length_angstrom,<energy column>` rows from a PES CSV.
std::vector<SurfacePoint> read_pes_csv(const std::filesystem::path& path,
                                       const std::string& energy_column =
                                           "exact_energy");

}  // namespace aqv
