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

#include "aquavqe/ansatz.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "aquavqe/error.hpp"

namespace aqv {

HFReference HFReference::closed_shell(std::size_t n_qubits, std::size_t n_alpha,
                                      std::size_t n_beta, SpinOrdering ordering) {
  if (n_qubits % 2 != 0)
    fail(ErrorKind::kDomain, "spin-orbital layout needs an even qubit count");
  const auto n_spatial = n_qubits / 2;
  if (n_alpha > n_spatial || n_beta > n_spatial)
    fail(ErrorKind::kDomain, "more electrons than spin orbitals of one spin");
  HFReference hf{n_qubits, {}};
  for (std::size_t p = 0; p < n_alpha; ++p)
    hf.occupied.push_back(spin_orbital_qubit(ordering, n_spatial, p, false));
  for (std::size_t p = 0; p < n_beta; ++p)
    hf.occupied.push_back(spin_orbital_qubit(ordering, n_spatial, p, true));
  std::sort(hf.occupied.begin(), hf.occupied.end());
  return hf;
}

std::uint64_t HFReference::bitstring() const {
  std::uint64_t bits = 0;
  for (auto q : occupied) bits |= std::uint64_t{1} << q;
  return bits;
}

AnsatzCircuit::AnsatzCircuit(std::size_t n_qubits, std::size_t layers,
                             const HFReference& hf)
    : n_qubits_(n_qubits), layers_(layers), hf_(hf) {
  if (n_qubits == 0 || n_qubits > Statevector::kMaxQubits)
    fail(ErrorKind::kDomain, "ansatz qubit count out of range");
  if (hf.n_qubits != n_qubits)
    fail(ErrorKind::kDomain, "HF reference sized for a different qubit count");
  for (auto q : hf.occupied)
    if (q >= n_qubits)
      fail(ErrorKind::kDomain, "HF occupied index " + std::to_string(q) +
                                   " >= n_qubits");

  // A CNOT ladder maps bit k to the prefix parity b_0 ^ ... ^ b_k. Undo it
  // layers times, last CNOT first.
  std::uint64_t bits = hf.bitstring();
  for (std::size_t l = 0; l < layers; ++l)
    for (std::size_t q = n_qubits - 1; q-- > 0;)
      if ((bits >> q) & 1U) bits ^= std::uint64_t{1} << (q + 1);
  for (std::size_t q = 0; q < n_qubits; ++q)
    if ((bits >> q) & 1U) prep_.push_back(Gate::x(q));

  std::size_t slot = 0;
  for (std::size_t l = 0; l <= layers; ++l) {
    for (std::size_t q = 0; q < n_qubits; ++q) gates_.push_back(Gate::ry(q, slot++));
    for (std::size_t q = 0; q < n_qubits; ++q) gates_.push_back(Gate::rz(q, slot++));
    if (l == layers) break;
    for (std::size_t q = 0; q + 1 < n_qubits; ++q)
      gates_.push_back(Gate::cnot(q, q + 1));
  }
}

std::vector<Gate> AnsatzCircuit::all_gates() const {
  std::vector<Gate> out(prep_);
  out.insert(out.end(), gates_.begin(), gates_.end());
  return out;
}

Statevector prepare_state(const AnsatzCircuit& circuit,
                          std::span<const double> params) {
  if (params.size() != circuit.n_params())
    fail(ErrorKind::kDomain, "expected " + std::to_string(circuit.n_params()) +
                                 " parameters, got " +
                                 std::to_string(params.size()));
  Statevector state(circuit.n_qubits());
  for (const auto& g : circuit.prep_gates()) apply_gate(state, g, params);
  for (const auto& g : circuit.gates()) apply_gate(state, g, params);
  return state;
}

double ansatz_energy(const AnsatzCircuit& circuit, const PauliOperatorSum& h,
                     std::span<const double> params) {
  return expectation(prepare_state(circuit, params), h);
}

void write_circuit(std::ostream& out, const AnsatzCircuit& circuit) {
  for (const auto& g : circuit.all_gates()) {
    switch (g.kind) {
      case GateKind::X: out << "X " << g.target; break;
      case GateKind::Ry: out << "RY " << g.target << " slot " << *g.parameter_slot; break;
      case GateKind::Rz: out << "RZ " << g.target << " slot " << *g.parameter_slot; break;
      case GateKind::CNOT: out << "CNOT " << *g.control << ' ' << g.target; break;
    }
    out << '\n';
  }
}

std::string to_text(const AnsatzCircuit& circuit) {
  std::ostringstream out;
  write_circuit(out, circuit);
  return out.str();
}

}  // namespace aqv
