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

#include "aquavqe/pes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

#include "aquavqe/error.hpp"
#include "aquavqe/exact.hpp"
#include "aquavqe/report.hpp"
#include "aquavqe/rng.hpp"

namespace aqv {

namespace {

PESRecord scan_entry(const ScanEntry& entry, std::span<const double> warm_params,
                     const ScanOptions& options, const ActiveSpaceSpec& spec,
                     std::uint64_t seed) {
  const auto full = load_fcidump(entry.fcidump.string());
  const auto reduced = reduce_active_space(full, spec);
  const auto h = jordan_wigner(reduced);
  const auto exact = ground_state(h, options.sector);
  const AnsatzCircuit circuit(
      h.n_qubits(), options.layers,
      HFReference::closed_shell(h.n_qubits(), reduced.n_alpha(), reduced.n_beta()));
  SPSAConfig config = options.spsa;
  config.seed = seed;
  const auto run = vqe_energy(h, circuit, warm_params, config, options.vqe);
  return {entry.geometry, run.energy,   exact.ground_energy,
          std::abs(run.energy - exact.ground_energy), run.diagnostics,
          run.params};
}

std::string geometry_label(const Geometry& g) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.6g deg, %.6g A)", g.bond_angle,
                g.bond_length);
  return buf;
}

}  // namespace

ScanResult scan(const ScanManifest& manifest, std::span<const double> warm_params,
                const ScanOptions& options) {
  if (manifest.entries.empty())
    fail(ErrorKind::kValidation, "manifest lists no geometries to scan");
  const auto n = manifest.entries.size();
  std::vector<std::optional<PESRecord>> slots(n);
  std::vector<std::optional<std::string>> errors(n);
  std::vector<ErrorKind> kinds(n, ErrorKind::kDomain);
  std::atomic<std::size_t> next{0};
  // Lowest failing index; later entries are skipped so the reported failure
  // does not depend on scheduling.
  std::atomic<std::size_t> first_error{n};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      if (!options.keep_going && i > first_error) continue;
      const auto& entry = manifest.entries[i];
      try {
        slots[i] = scan_entry(entry, warm_params, options, manifest.active_space,
                              derive_seed(options.spsa.seed, i));
      } catch (const Error& e) {
        errors[i] = e.what();
        kinds[i] = e.kind();
        auto seen = first_error.load();
        while (i < seen && !first_error.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  const auto jobs = std::max<std::size_t>(1, std::min(options.jobs, n));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  ScanResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) {
      const auto label = geometry_label(manifest.entries[i].geometry);
      if (!options.keep_going)
        throw Error(kinds[i], "scan entry " + label + ": " + *errors[i]);
      result.failures.push_back({manifest.entries[i].geometry, *errors[i]});
    } else if (slots[i]) {
      result.records.push_back(std::move(*slots[i]));
    }
  }
  return result;
}

double SurfaceFit::angle_part(double x) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < kPowers.size(); ++k)
    sum += angle_coefficients[k] * std::pow(x, -kPowers[k]);
  return sum;
}

double SurfaceFit::length_part(double y) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < kPowers.size(); ++k)
    sum += length_coefficients[k] * std::pow(y, -kPowers[k]);
  return sum;
}

SurfaceFit fit_surface(std::span<const SurfacePoint> points) {
  constexpr std::size_t kColumns = 9;
  if (points.size() < 10)
    fail(ErrorKind::kDomain, "surface fit needs at least 10 points, got " +
                                 std::to_string(points.size()));
  std::set<double> angles, lengths;
  for (const auto& p : points) {
    if (!(p.angle > 0.0 && p.length > 0.0) || !std::isfinite(p.energy))
      fail(ErrorKind::kDomain, "surface points need positive coordinates and finite energies");
    angles.insert(p.angle);
    lengths.insert(p.length);
  }
  if (angles.size() < 3 || lengths.size() < 3)
    fail(ErrorKind::kDomain, "surface fit needs at least 3 distinct angles and 3 distinct lengths");

  const auto m = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(m, kColumns);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& p = points[static_cast<std::size_t>(i)];
    design(i, 0) = 1.0;
    for (std::size_t k = 0; k < 4; ++k) {
      design(i, static_cast<Eigen::Index>(1 + k)) =
          std::pow(p.angle, -SurfaceFit::kPowers[k]);
      design(i, static_cast<Eigen::Index>(5 + k)) =
          std::pow(p.length, -SurfaceFit::kPowers[k]);
    }
    rhs(i) = p.energy;
  }
  const Eigen::VectorXd scale = design.colwise().norm().transpose();
  const Eigen::MatrixXd scaled = design * scale.cwiseInverse().asDiagonal();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
  // Pivots below this fraction of the largest one count as deficient.
  qr.setThreshold(1e-13);
  if (qr.rank() < static_cast<Eigen::Index>(kColumns)) {
    static const char* kNames[kColumns] = {
        "1",      "x^-2", "x^-3", "x^-4", "x^-4.5",
        "y^-2",   "y^-3", "y^-4", "y^-4.5"};
    std::string names;
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index k = qr.rank(); k < static_cast<Eigen::Index>(kColumns); ++k) {
      if (!names.empty()) names += ", ";
      names += kNames[perm(k)];
    }
    fail(ErrorKind::kFit, "rank-deficient surface design (rank " +
                              std::to_string(qr.rank()) +
                              " of 9); dependent columns: " + names);
  }
  const Eigen::VectorXd coeffs =
      (qr.solve(rhs).array() / scale.array()).matrix();

  SurfaceFit fit;
  fit.intercept = coeffs(0);
  for (std::size_t k = 0; k < 4; ++k) {
    fit.angle_coefficients[k] = coeffs(static_cast<Eigen::Index>(1 + k));
    fit.length_coefficients[k] = coeffs(static_cast<Eigen::Index>(5 + k));
  }
  double ss = 0.0;
  for (const auto& p : points) {
    const double r = fit.evaluate(p.angle, p.length) - p.energy;
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(points.size()));
  fit.n_points = points.size();
  fit.angle_min = *angles.begin();
  fit.angle_max = *angles.rbegin();
  fit.length_min = *lengths.begin();
  fit.length_max = *lengths.rbegin();
  return fit;
}

double golden_section_minimize(const std::function<double(double)>& f,
                               double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // Compare the refined point with the bracket ends so edge minima survive.
  double best = 0.5 * (a + b);
  double fbest = f(best);
  for (double edge : {lo, hi})
    if (f(edge) < fbest) {
      best = edge;
      fbest = f(edge);
    }
  return best;
}

namespace {

struct SectionMinimum {
  double at;
  bool boundary;
};

SectionMinimum minimize_section(const std::function<double(double)>& f,
                                Interval range) {
  constexpr std::size_t kGrid = 1000;
  const double step = (range.hi - range.lo) / static_cast<double>(kGrid - 1);
  std::size_t best = 0;
  double fbest = f(range.lo);
  for (std::size_t i = 1; i < kGrid; ++i) {
    const double v = f(range.lo + step * static_cast<double>(i));
    if (v < fbest) {
      fbest = v;
      best = i;
    }
  }
  const bool boundary = best == 0 || best == kGrid - 1;
  const double lo = range.lo + step * static_cast<double>(best == 0 ? 0 : best - 1);
  const double hi =
      range.lo + step * static_cast<double>(std::min(best + 1, kGrid - 1));
  double at = golden_section_minimize(f, lo, hi, 1e-6);
  if (boundary) at = best == 0 ? range.lo : range.hi;
  return {at, boundary};
}

}  // namespace

SurfaceMinimum minimize_surface(const SurfaceFit& fit, Interval angle_range,
                                Interval length_range) {
  for (const auto& r : {angle_range, length_range})
    if (!(r.lo > 0.0 && r.hi > r.lo))
      fail(ErrorKind::kDomain, "minimization ranges must be positive and ordered");
  const auto x = minimize_section([&](double v) { return fit.angle_part(v); },
                                  angle_range);
  const auto y = minimize_section([&](double v) { return fit.length_part(v); },
                                  length_range);
  return {x.at, y.at, fit.evaluate(x.at, y.at), x.boundary, y.boundary};
}

SurfaceMinimum minimize_surface(const SurfaceFit& fit) {
  return minimize_surface(fit, {fit.angle_min, fit.angle_max},
                          {fit.length_min, fit.length_max});
}

std::string pes_csv(std::span<const PESRecord> records) {
  std::ostringstream out;
  out << "angle_deg,length_angstrom,vqe_energy,exact_energy,delta,top_prob,gap\n";
  for (const auto& r : records)
    out << format_number(r.geometry.bond_angle) << ','
        << format_number(r.geometry.bond_length) << ','
        << format_number(r.vqe_energy) << ',' << format_number(r.exact_energy)
        << ',' << format_number(r.delta) << ','
        << format_number(r.diagnostics.top_probability) << ','
        << format_number(r.diagnostics.gap) << '\n';
  return out.str();
}

namespace {

std::vector<double> rounded(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), round12);
  return out;
}

}  // namespace

std::string scan_json(const ScanResult& result, const ScanOptions& options) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : result.records)
    records.push_back({{"angle_deg", round12(r.geometry.bond_angle)},
                       {"length_angstrom", round12(r.geometry.bond_length)},
                       {"vqe_energy", round12(r.vqe_energy)},
                       {"exact_energy", round12(r.exact_energy)},
                       {"delta", round12(r.delta)},
                       {"diagnostics", to_json(r.diagnostics)},
                       {"params", rounded(r.params)}});
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : result.failures)
    failures.push_back({{"angle_deg", round12(f.geometry.bond_angle)},
                        {"length_angstrom", round12(f.geometry.bond_length)},
                        {"message", f.message}});
  nlohmann::json j;
  j["layers"] = options.layers;
  j["sector"] = options.sector ? nlohmann::json(*options.sector)
                               : nlohmann::json(nullptr);
  j["spsa"] = to_json(options.spsa);
  j["records"] = records;
  j["failures"] = failures;
  return j.dump(2) + "\n";
}

void emit_pes(std::span<const PESRecord> records, const SurfaceFit* fit,
              const SurfaceMinimum* minimum, const std::filesystem::path& prefix) {
  auto csv_path = prefix;
  csv_path += ".csv";
  write_file(csv_path, pes_csv(records));
  if (fit) {
    auto json_path = prefix;
    json_path += ".json";
    write_file(json_path, fit_json(*fit, minimum) + "\n");
  }
}

std::vector<SurfacePoint> read_pes_csv(const std::filesystem::path& path,
                                       const std::string& energy_column) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open PES CSV '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line))
    fail(ErrorKind::kParse, path.string() + ": empty CSV");
  std::vector<std::string> header;
  {
    std::istringstream cols(line);
    std::string col;
    while (std::getline(cols, col, ',')) {
      if (!col.empty() && col.back() == '\r') col.pop_back();
      header.push_back(col);
    }
  }
  auto column = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      fail(ErrorKind::kParse, path.string() + ": missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto ia = column("angle_deg"), il = column("length_angstrom"),
             ie = column(energy_column);
  std::vector<SurfacePoint> points;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> values;
    std::istringstream cols(line);
    std::string cell;
    while (std::getline(cols, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str())
        fail(ErrorKind::kParse, path.string() + " line " + std::to_string(line_no) +
                                    ": bad number '" + cell + "'");
      values.push_back(v);
    }
    if (values.size() != header.size())
      fail(ErrorKind::kParse, path.string() + " line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(header.size()) +
                                  " fields");
    points.push_back({values[ia], values[il], values[ie]});
  }
  return points;
}

}  // namespace aqv
