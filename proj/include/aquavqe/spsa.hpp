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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace aqv {

using Objective = std::function<double(std::span<const double>)>;

/// Gains a_k = a / (k + 1 + A)^alpha and c_k = c / (k + 1)^gamma. An unset `a`
/// is calibrated from probe evaluations, an unset `A` defaults to
/// 0.1 * max_iter.
struct SPSAConfig {
  std::size_t max_iter = 300;
  std::optional<double> a;
  double c = 0.1;
  std::optional<double> A;
  double alpha = 0.602;
  double gamma = 0.101;
  std::uint64_t seed = 0;
  /// Expected magnitude of the first update per parameter when calibrating.
  double target_step = 0.1;
  std::size_t calibration_probes = 25;
  bool keep_iterates = false;

  double resolved_A() const noexcept {
    return A.value_or(0.1 * static_cast<double>(max_iter));
  }
  double a_k(std::size_t k) const;
  double c_k(std::size_t k) const;
  /// Throws a domain error unless max_iter >= 1, a, c > 0 and
  /// 0 < gamma < alpha <= 1.
  void validate() const;
};

struct OptimizationTrace {
  /// Iterate x_k at the start of each iteration (only with keep_iterates).
  std::vector<std::vector<double>> iterates;
  /// min(f(x_k + c_k D_k), f(x_k - c_k D_k)) per iteration.
  std::vector<double> objective_history;
  /// Lowest value seen after each evaluation, in evaluation order.
  std::vector<double> best_seen;
  std::size_t n_evaluations = 0;
  std::size_t calibration_evaluations = 0;
  std::vector<double> final_params;
  double final_value = 0.0;
  SPSAConfig config;  // with a and A resolved
};

/// Fills in `a` from calibration_probes symmetric probes around x0 so that the
/// first step moves each parameter by about target_step. A preset `a` is
/// returned untouched.
SPSAConfig calibrate(const Objective& f, std::span<const double> x0,
                     const SPSAConfig& config,
                     std::size_t* evaluations = nullptr);

/// Simultaneous-perturbation gradient estimate
///   g_i = (f(x + c D) - f(x - c D)) / (2 c D_i).
std::vector<double> spsa_gradient(const Objective& f, std::span<const double> x,
                                  double c, std::span<const double> delta);

/// Minimizes f from x0. Evaluates x0, then two perturbed points per iteration,
/// then the last iterate. The returned parameters are the best evaluated
/// point, not necessarily the last iterate.
OptimizationTrace spsa_minimize(const Objective& f, std::span<const double> x0,
                                const SPSAConfig& config);

/// `iter,value` rows of objective_history.
void write_trace_csv(std::ostream& out, const OptimizationTrace& trace);

}  // namespace aqv
