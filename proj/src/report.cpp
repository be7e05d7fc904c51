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

#include "aquavqe/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "aquavqe/error.hpp"
#include "aquavqe/pes.hpp"

namespace aqv {

using nlohmann::json;

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) fail(ErrorKind::kIo, "write failed for '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json to_json(const SPSAConfig& c) {
  json j;
  j["max_iter"] = c.max_iter;
  j["a"] = c.a ? json(*c.a) : json(nullptr);
  j["c"] = c.c;
  j["A"] = c.resolved_A();
  j["alpha"] = c.alpha;
  j["gamma"] = c.gamma;
  j["seed"] = c.seed;
  j["target_step"] = c.target_step;
  j["calibration_probes"] = c.calibration_probes;
  return j;
}

json to_json(const ProbabilityDiagnostics& d) {
  return {{"top_index", d.top_index},
          {"top_probability", round12(d.top_probability)},
          {"second_index", d.second_index},
          {"second_probability", round12(d.second_probability)},
          {"gap", round12(d.gap)}};
}

json to_json(const VQERun& run, double reference) {
  return {{"energy", run.energy},
          {"delta", std::abs(run.energy - reference)},
          {"seed", run.seed},
          {"diagnostics", to_json(run.diagnostics)},
          {"config", to_json(run.trace.config)},
          {"n_evaluations", run.trace.n_evaluations},
          {"params", run.params}};
}

json to_json(const WarmStartResult& result) {
  json runs = json::array();
  for (const auto& r : result.runs) runs.push_back(to_json(r, result.reference_energy));
  return {{"reference_energy", result.reference_energy},
          {"best_run_index", result.best_run_index},
          {"lowest_energy_index", result.lowest_energy_index},
          {"best_energy", result.runs[result.best_run_index].energy},
          {"best_delta", result.deltas[result.best_run_index]},
          {"deltas", result.deltas},
          {"best_params", result.best_params},
          {"runs", runs}};
}

std::string warm_start_csv(const WarmStartResult& result) {
  std::ostringstream out;
  out << "run,energy,delta,top_prob,gap\n";
  for (std::size_t r = 0; r < result.runs.size(); ++r) {
    const auto& run = result.runs[r];
    out << r << ',' << format_number(run.energy) << ','
        << format_number(result.deltas[r]) << ','
        << format_number(run.diagnostics.top_probability) << ','
        << format_number(run.diagnostics.gap) << '\n';
  }
  return out.str();
}

json trace_summary(const OptimizationTrace& trace) {
  return {{"final_value", trace.final_value},
          {"final_params", trace.final_params},
          {"n_evaluations", trace.n_evaluations},
          {"iterations", trace.objective_history.size()},
          {"config", to_json(trace.config)}};
}

std::string fit_json(const SurfaceFit& fit, const SurfaceMinimum* minimum) {
  json coeffs = json::array();
  coeffs.push_back({{"basis", "1"}, {"value", round12(fit.intercept)}});
  for (std::size_t k = 0; k < 4; ++k)
    coeffs.push_back({{"basis", "x^-" + format_number(SurfaceFit::kPowers[k])},
                      {"value", round12(fit.angle_coefficients[k])}});
  for (std::size_t k = 0; k < 4; ++k)
    coeffs.push_back({{"basis", "y^-" + format_number(SurfaceFit::kPowers[k])},
                      {"value", round12(fit.length_coefficients[k])}});
  json j;
  j["model"] = "E = c0 + sum_p a_p x^-p + sum_p b_p y^-p, p in {2,3,4,4.5}";
  j["x"] = "bond angle (deg)";
  j["y"] = "bond length (Angstrom)";
  j["coefficients"] = coeffs;
  j["residual_rms"] = round12(fit.residual_rms);
  j["n_points"] = fit.n_points;
  j["angle_range"] = {round12(fit.angle_min), round12(fit.angle_max)};
  j["length_range"] = {round12(fit.length_min), round12(fit.length_max)};
  if (minimum) {
    j["minimum"] = {{"angle_deg", round12(minimum->angle_star)},
                    {"length_angstrom", round12(minimum->length_star)},
                    {"energy", round12(minimum->energy_star)},
                    {"angle_at_boundary", minimum->angle_at_boundary},
                    {"length_at_boundary", minimum->length_at_boundary}};
  }
  return j.dump(2);
}

std::vector<double> read_params_json(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kParse, path.string() + ": " + e.what());
  }
  for (const char* key : {"best_params", "params"})
    if (j.contains(key) && j[key].is_array())
      return j[key].get<std::vector<double>>();
  fail(ErrorKind::kParse, path.string() + ": no 'best_params' or 'params' array");
}

}  // namespace aqv
