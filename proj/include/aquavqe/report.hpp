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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aquavqe/spsa.hpp"
#include "aquavqe/vqe.hpp"

namespace aqv {

struct SurfaceFit;
struct SurfaceMinimum;

/// 12 significant digits, `%.12g`.
std::string format_number(double v);
/// Rounds to 12 significant digits so JSON output is byte-stable.
double round12(double v);

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

nlohmann::json to_json(const SPSAConfig& config);
nlohmann::json to_json(const ProbabilityDiagnostics& d);
nlohmann::json to_json(const VQERun& run, double reference);
nlohmann::json to_json(const WarmStartResult& result);

/// `run,energy,delta,top_prob,gap`
std::string warm_start_csv(const WarmStartResult& result);
/// Optimization summary: final value, params, evaluation count, config echo.
nlohmann::json trace_summary(const OptimizationTrace& trace);

std::string fit_json(const SurfaceFit& fit, const SurfaceMinimum* minimum);

/// Reads `best_params` (or `params`) from a warm-start or VQE JSON file.
std::vector<double> read_params_json(const std::filesystem::path& path);

}  // namespace aqv
