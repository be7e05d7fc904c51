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

#include "aquavqe/vqe.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "aquavqe/error.hpp"
#include "aquavqe/rng.hpp"

namespace aqv {

ProbabilityDiagnostics diagnostics_from_probabilities(std::span<const double> p) {
  ProbabilityDiagnostics d;
  if (p.empty()) return d;
  std::size_t top = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[top]) top = i;
  std::size_t second = top == 0 ? 1 : 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i != top && p[i] > p[second]) second = i;
  d.top_index = top;
  d.top_probability = p[top];
  if (p.size() > 1) {
    d.second_index = second;
    d.second_probability = p[second];
  }
  d.gap = d.top_probability - d.second_probability;
  return d;
}

ProbabilityDiagnostics diagnostics_from_state(const Statevector& state) {
  return diagnostics_from_probabilities(probabilities(state));
}

ProbabilityDiagnostics diagnostics_from_counts(
    const std::map<std::uint64_t, std::uint64_t>& counts, std::size_t dimension) {
  std::vector<double> p(dimension, 0.0);
  std::uint64_t total = 0;
  for (const auto& [idx, n] : counts) total += n;
  for (const auto& [idx, n] : counts) {
    if (idx >= dimension) fail(ErrorKind::kDomain, "count index beyond dimension");
    p[idx] = static_cast<double>(n) / static_cast<double>(total);
  }
  return diagnostics_from_probabilities(p);
}

Objective energy_objective(const PauliOperatorSum& h,
                           const AnsatzCircuit& circuit) {
  if (h.n_qubits() != circuit.n_qubits())
    fail(ErrorKind::kDomain, "Hamiltonian and ansatz qubit counts differ");
  return [&h, &circuit](std::span<const double> theta) {
    return ansatz_energy(circuit, h, theta);
  };
}

VQERun vqe_energy(const PauliOperatorSum& h, const AnsatzCircuit& circuit,
                  std::span<const double> x0, const SPSAConfig& config,
                  const VQEOptions& options) {
  if (x0.size() != circuit.n_params())
    fail(ErrorKind::kDomain, "initial point has " + std::to_string(x0.size()) +
                                 " angles, ansatz needs " +
                                 std::to_string(circuit.n_params()));
  VQERun run;
  run.seed = config.seed;
  run.initial_params.assign(x0.begin(), x0.end());
  run.trace = spsa_minimize(energy_objective(h, circuit), x0, config);
  run.params = run.trace.final_params;
  run.energy = run.trace.final_value;
  const auto state = prepare_state(circuit, run.params);
  run.diagnostics =
      options.shots == 0
          ? diagnostics_from_state(state)
          : diagnostics_from_counts(
                sample_counts(state, options.shots, derive_seed(config.seed, 2)),
                state.dimension());
  return run;
}

std::vector<double> random_angles(std::size_t n, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return out;
}

WarmStartResult warm_start_search(const PauliOperatorSum& h,
                                  const AnsatzCircuit& circuit,
                                  const SPSAConfig& config, double reference,
                                  const WarmStartOptions& options) {
  if (options.n_restarts < 1)
    fail(ErrorKind::kDomain, "warm start needs at least one restart");
  const auto n = options.n_restarts;
  WarmStartResult result;
  result.reference_energy = reference;
  result.runs.resize(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < n; r = next++) {
      try {
        SPSAConfig run_config = config;
        run_config.seed = derive_seed(config.seed, r);
        const auto x0 = random_angles(circuit.n_params(),
                                      derive_seed(run_config.seed, 3));
        result.runs[r] = vqe_energy(h, circuit, x0, run_config, options.vqe);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  const auto jobs = std::clamp<std::size_t>(options.jobs, 1, n);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& run : result.runs)
    result.deltas.push_back(std::abs(run.energy - reference));
  for (std::size_t r = 1; r < result.runs.size(); ++r) {
    if (result.deltas[r] < result.deltas[result.best_run_index])
      result.best_run_index = r;
    if (result.runs[r].energy < result.runs[result.lowest_energy_index].energy)
      result.lowest_energy_index = r;
  }
  result.best_params = result.runs[result.best_run_index].params;
  return result;
}

}  // namespace aqv
