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
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "aquavqe/pauli.hpp"

namespace aqv {

/// Dense 2^n amplitude vector. Bit k of a basis index is the occupation of
/// qubit k (qubit 0 least significant).
class Statevector {
 public:
  static constexpr std::size_t kMaxQubits = 24;

  /// |0...0> on n qubits.
  explicit Statevector(std::size_t n_qubits);
  static Statevector basis_state(std::size_t n_qubits, std::uint64_t index);
  /// Takes ownership of amplitudes; the length must be a power of two. The
  /// vector is not renormalized.
  static Statevector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  Complex operator[](std::size_t i) const noexcept { return amps_[i]; }
  double norm() const noexcept;

 private:
  Statevector() = default;
  std::size_t n_qubits_ = 0;
  std::vector<Complex> amps_;
};

enum class GateKind : std::uint8_t { X, Ry, Rz, CNOT };

struct Gate {
  GateKind kind;
  std::size_t target;
  std::optional<std::size_t> control;         // CNOT only
  std::optional<std::size_t> parameter_slot;  // Ry / Rz only

  static Gate x(std::size_t q) { return {GateKind::X, q, {}, {}}; }
  static Gate ry(std::size_t q, std::size_t slot) {
    return {GateKind::Ry, q, {}, slot};
  }
  static Gate rz(std::size_t q, std::size_t slot) {
    return {GateKind::Rz, q, {}, slot};
  }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, target, control, {}};
  }
  bool operator==(const Gate&) const = default;
};

/// Applies the gate in place. Ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]],
/// Rz(t) = diag(exp(-i t/2), exp(i t/2)).
void apply_gate(Statevector& state, const Gate& gate,
                std::span<const double> params);
/// Rotation with an explicit angle, bypassing parameter slots.
void apply_rotation(Statevector& state, GateKind kind, std::size_t qubit,
                    double angle);

/// <psi|P|psi> for a single Pauli string (coefficient ignored).
Complex pauli_expectation(const Statevector& state, std::uint64_t x_mask,
                          std::uint64_t z_mask);
/// sum_k c_k <psi|P_k|psi>, accumulated in term order. The imaginary residual
/// of a Hermitian operator is dropped.
double expectation(const Statevector& state, const PauliOperatorSum& op);
/// Complex variant for non-Hermitian sums.
Complex expectation_complex(const Statevector& state,
                            const PauliOperatorSum& op);

std::vector<double> probabilities(const Statevector& state);

/// Multinomial sample of basis indices; deterministic in seed.
std::map<std::uint64_t, std::uint64_t> sample_counts(const Statevector& state,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed);

/// `<index> <re> <im>` per amplitude with modulus above 1e-14.
void write_statevector(std::ostream& out, const Statevector& state);

}  // namespace aqv
