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

#include "aquavqe/spsa.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "aquavqe/error.hpp"
#include "aquavqe/rng.hpp"

namespace aqv {

namespace {

constexpr std::uint64_t kIterationStream = 0;
constexpr std::uint64_t kCalibrationStream = 1;

void rademacher(Xoshiro256& rng, std::vector<double>& delta) {
  for (auto& d : delta) d = rng.rademacher();
}

}  // namespace

double SPSAConfig::a_k(std::size_t k) const {
  return a.value() / std::pow(static_cast<double>(k + 1) + resolved_A(), alpha);
}

double SPSAConfig::c_k(std::size_t k) const {
  return c / std::pow(static_cast<double>(k + 1), gamma);
}

void SPSAConfig::validate() const {
  if (max_iter < 1) fail(ErrorKind::kDomain, "SPSA max_iter must be >= 1");
  if (a && !(*a > 0.0)) fail(ErrorKind::kDomain, "SPSA gain a must be > 0");
  if (!(c > 0.0)) fail(ErrorKind::kDomain, "SPSA perturbation c must be > 0");
  if (A && !(*A >= 0.0)) fail(ErrorKind::kDomain, "SPSA stability A must be >= 0");
  if (!(gamma > 0.0 && gamma < alpha && alpha <= 1.0))
    fail(ErrorKind::kDomain, "SPSA exponents need 0 < gamma < alpha <= 1");
  if (!(target_step > 0.0))
    fail(ErrorKind::kDomain, "SPSA target_step must be > 0");
}

SPSAConfig calibrate(const Objective& f, std::span<const double> x0,
                     const SPSAConfig& config, std::size_t* evaluations) {
  if (evaluations) *evaluations = 0;
  if (config.a) return config;
  SPSAConfig out = config;
  Xoshiro256 rng(derive_seed(config.seed, kCalibrationStream));
  std::vector<double> delta(x0.size()), plus(x0.size()), minus(x0.size());
  double magnitude = 0.0;
  std::size_t finite = 0;
  for (std::size_t probe = 0; probe < config.calibration_probes; ++probe) {
    rademacher(rng, delta);
    for (std::size_t i = 0; i < x0.size(); ++i) {
      plus[i] = x0[i] + config.c * delta[i];
      minus[i] = x0[i] - config.c * delta[i];
    }
    const double diff = f(plus) - f(minus);
    if (evaluations) *evaluations += 2;
    if (!std::isfinite(diff)) continue;
    magnitude += std::abs(diff) / (2.0 * config.c);
    ++finite;
  }
  if (finite == 0)
    fail(ErrorKind::kCalibration, "every SPSA calibration probe was non-finite");
  magnitude /= static_cast<double>(finite);
  const double scale = std::pow(out.resolved_A() + 1.0, out.alpha);
  // A flat objective gives no information; fall back to unit gradient scale.
  out.a = config.target_step * scale / (magnitude > 0.0 ? magnitude : 1.0);
  out.A = out.resolved_A();
  return out;
}

std::vector<double> spsa_gradient(const Objective& f, std::span<const double> x,
                                  double c, std::span<const double> delta) {
  std::vector<double> plus(x.size()), minus(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    plus[i] = x[i] + c * delta[i];
    minus[i] = x[i] - c * delta[i];
  }
  const double diff = f(plus) - f(minus);
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = diff / (2.0 * c * delta[i]);
  return g;
}

OptimizationTrace spsa_minimize(const Objective& f, std::span<const double> x0,
                                const SPSAConfig& config) {
  config.validate();
  for (double v : x0)
    if (!std::isfinite(v)) fail(ErrorKind::kDomain, "SPSA start is not finite");

  OptimizationTrace trace;
  trace.config = calibrate(f, x0, config, &trace.calibration_evaluations);
  trace.config.A = trace.config.resolved_A();
  const SPSAConfig& cfg = trace.config;
  trace.n_evaluations = trace.calibration_evaluations;

  const std::size_t d = x0.size();
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> delta(d), plus(d), minus(d);
  double best = 0.0;

  auto consider = [&](double value, const std::vector<double>& at,
                      std::size_t iteration) {
    if (!std::isfinite(value))
      fail(ErrorKind::kOptimizer, "objective returned " + std::to_string(value) +
                                      " at SPSA iteration " +
                                      std::to_string(iteration));
    ++trace.n_evaluations;
    if (trace.best_seen.empty() || value < best) {
      best = value;
      trace.final_params = at;
      trace.final_value = value;
    }
    trace.best_seen.push_back(best);
  };

  consider(f(x), x, 0);
  Xoshiro256 rng(derive_seed(cfg.seed, kIterationStream));
  trace.objective_history.reserve(cfg.max_iter);
  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    if (cfg.keep_iterates) trace.iterates.push_back(x);
    const double ak = cfg.a_k(k), ck = cfg.c_k(k);
    rademacher(rng, delta);
    for (std::size_t i = 0; i < d; ++i) {
      plus[i] = x[i] + ck * delta[i];
      minus[i] = x[i] - ck * delta[i];
    }
    const double fp = f(plus);
    consider(fp, plus, k);
    const double fm = f(minus);
    consider(fm, minus, k);
    trace.objective_history.push_back(std::min(fp, fm));
    const double scale = (fp - fm) / (2.0 * ck);
    for (std::size_t i = 0; i < d; ++i) x[i] -= ak * scale / delta[i];
  }
  consider(f(x), x, cfg.max_iter);
  return trace;
}

void write_trace_csv(std::ostream& out, const OptimizationTrace& trace) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << "iter,value\n" << std::setprecision(12);
  for (std::size_t k = 0; k < trace.objective_history.size(); ++k)
    out << k << ',' << trace.objective_history[k] << '\n';
  out.flags(flags);
  out.precision(prec);
}

}  // namespace aqv
