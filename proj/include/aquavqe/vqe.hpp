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
#include <map>
#include <span>
#include <vector>

#include "aquavqe/ansatz.hpp"
#include "aquavqe/pauli.hpp"
#include "aquavqe/spsa.hpp"

namespace aqv {

/// 1 kcal/mol in Hartree.
inline constexpr double kChemicalAccuracy = 1.6e-3;

struct ProbabilityDiagnostics {
  std::uint64_t top_index = 0;
  double top_probability = 0.0;
  std::uint64_t second_index = 0;
  double second_probability = 0.0;
  double gap = 0.0;
};

/// Top two entries, ties broken toward the lower basis index.
ProbabilityDiagnostics diagnostics_from_probabilities(std::span<const double> p);
ProbabilityDiagnostics diagnostics_from_state(const Statevector& state);
/// Same metric over a shot histogram of a 2^n-dimensional state.
ProbabilityDiagnostics diagnostics_from_counts(
    const std::map<std::uint64_t, std::uint64_t>& counts, std::size_t dimension);

struct VQEOptions {
  /// When nonzero the diagnostics come from this many sampled shots instead
  /// of the exact probabilities. Energies are always exact.
  std::uint64_t shots = 0;
};

struct VQERun {
  double energy = 0.0;
  std::vector<double> initial_params;
  std::vector<double> params;
  OptimizationTrace trace;
  std::uint64_t seed = 0;
  ProbabilityDiagnostics diagnostics;
};

/// theta -> <psi(theta)|H|psi(theta)>.
Objective energy_objective(const PauliOperatorSum& h, const AnsatzCircuit& circuit);

VQERun vqe_energy(const PauliOperatorSum& h, const AnsatzCircuit& circuit,
                  std::span<const double> x0, const SPSAConfig& config,
                  const VQEOptions& options = {});

/// n values uniform in [-pi, pi).
std::vector<double> random_angles(std::size_t n, std::uint64_t seed);

struct WarmStartResult {
  std::vector<VQERun> runs;
  std::size_t best_run_index = 0;     // argmin |E - reference|
  std::size_t lowest_energy_index = 0;  // argmin E
  std::vector<double> best_params;
  double reference_energy = 0.0;
  std::vector<double> deltas;
};

struct WarmStartOptions {
  std::size_t n_restarts = 10;
  VQEOptions vqe;
  /// Worker threads; results do not depend on it.
  std::size_t jobs = 1;
};

/// Repeated VQE from random starting angles; the run closest to the
/// reference energy supplies the warm-start parameters.
WarmStartResult warm_start_search(const PauliOperatorSum& h,
                                  const AnsatzCircuit& circuit,
                                  const SPSAConfig& config, double reference,
                                  const WarmStartOptions& options = {});

}  // namespace aqv
