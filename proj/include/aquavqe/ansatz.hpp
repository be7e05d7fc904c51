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
#include <iosfwd>
#include <span>
#include <vector>

#include "aquavqe/statevector.hpp"

namespace aqv {

/// Hartree-Fock occupation: the lowest n_alpha alpha and lowest n_beta beta
/// spin orbitals, placed on qubits by the spin ordering.
struct HFReference {
  std::size_t n_qubits = 0;
  std::vector<std::size_t> occupied;  // ascending

  static HFReference closed_shell(
      std::size_t n_qubits, std::size_t n_alpha, std::size_t n_beta,
      SpinOrdering ordering = SpinOrdering::kBlocked);
  std::uint64_t bitstring() const;
};

/// Hardware-efficient circuit: per layer an Ry column, an Rz column and a CNOT
/// ladder (i -> i+1), closed by a final Ry+Rz column. The X preparation gates
/// are chosen so that with every angle at zero the circuit outputs exactly
/// the HF determinant: they encode the preimage of the HF bitstring under the
/// composed CNOT ladders.
class AnsatzCircuit {
 public:
  AnsatzCircuit(std::size_t n_qubits, std::size_t layers, const HFReference& hf);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t layers() const noexcept { return layers_; }
  std::size_t n_params() const noexcept { return 2 * n_qubits_ * (layers_ + 1); }
  const HFReference& reference() const noexcept { return hf_; }
  const std::vector<Gate>& prep_gates() const noexcept { return prep_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  /// prep_gates followed by gates.
  std::vector<Gate> all_gates() const;

 private:
  std::size_t n_qubits_;
  std::size_t layers_;
  HFReference hf_;
  std::vector<Gate> prep_;
  std::vector<Gate> gates_;
};

inline AnsatzCircuit build_ansatz(std::size_t n_qubits, std::size_t layers,
                                  const HFReference& hf) {
  return AnsatzCircuit(n_qubits, layers, hf);
}

/// |psi(theta)> from |0...0>.
Statevector prepare_state(const AnsatzCircuit& circuit,
                          std::span<const double> params);

/// <psi(theta)|H|psi(theta)>.
double ansatz_energy(const AnsatzCircuit& circuit, const PauliOperatorSum& h,
                     std::span<const double> params);

/// One gate per line: `X 3`, `RY 0 slot 0`, `CNOT 0 1`.
void write_circuit(std::ostream& out, const AnsatzCircuit& circuit);
std::string to_text(const AnsatzCircuit& circuit);

}  // namespace aqv
