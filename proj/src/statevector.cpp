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

#include "aquavqe/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "aquavqe/error.hpp"
#include "aquavqe/rng.hpp"

namespace aqv {

namespace {

void check_qubits(std::size_t n) {
  if (n == 0 || n > Statevector::kMaxQubits)
    fail(ErrorKind::kResource, "statevector supports 1.." +
                                   std::to_string(Statevector::kMaxQubits) +
                                   " qubits, got " + std::to_string(n));
}

void check_index(const Statevector& s, std::size_t q) {
  if (q >= s.n_qubits())
    fail(ErrorKind::kDomain, "qubit " + std::to_string(q) + " out of range for " +
                                 std::to_string(s.n_qubits()) + " qubits");
}

}  // namespace

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

Statevector Statevector::basis_state(std::size_t n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dimension())
    fail(ErrorKind::kDomain, "basis index beyond dimension");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes) {
  if (!std::has_single_bit(amplitudes.size()) || amplitudes.size() < 2)
    fail(ErrorKind::kDomain, "amplitude count must be a power of two >= 2");
  Statevector s;
  s.n_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
  check_qubits(s.n_qubits_);
  s.amps_ = std::move(amplitudes);
  return s;
}

double Statevector::norm() const noexcept {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void apply_rotation(Statevector& state, GateKind kind, std::size_t qubit,
                    double angle) {
  check_index(state, qubit);
  auto amps = state.amplitudes();
  const std::size_t bit = std::size_t{1} << qubit;
  if (kind == GateKind::Ry) {
    const double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (i & bit) continue;
      const Complex a0 = amps[i], a1 = amps[i | bit];
      amps[i] = c * a0 - s * a1;
      amps[i | bit] = s * a0 + c * a1;
    }
  } else if (kind == GateKind::Rz) {
    const Complex lo = std::polar(1.0, -0.5 * angle);
    const Complex hi = std::polar(1.0, 0.5 * angle);
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= (i & bit) ? hi : lo;
  } else {
    fail(ErrorKind::kDomain, "apply_rotation takes Ry or Rz");
  }
}

void apply_gate(Statevector& state, const Gate& gate,
                std::span<const double> params) {
  check_index(state, gate.target);
  auto amps = state.amplitudes();
  const std::size_t bit = std::size_t{1} << gate.target;
  switch (gate.kind) {
    case GateKind::X:
      for (std::size_t i = 0; i < amps.size(); ++i)
        if (!(i & bit)) std::swap(amps[i], amps[i | bit]);
      return;
    case GateKind::CNOT: {
      if (!gate.control) fail(ErrorKind::kDomain, "CNOT without control");
      check_index(state, *gate.control);
      if (*gate.control == gate.target)
        fail(ErrorKind::kDomain, "CNOT control equals target");
      const std::size_t cbit = std::size_t{1} << *gate.control;
      for (std::size_t i = 0; i < amps.size(); ++i)
        if ((i & cbit) && !(i & bit)) std::swap(amps[i], amps[i | bit]);
      return;
    }
    case GateKind::Ry:
    case GateKind::Rz: {
      if (!gate.parameter_slot || *gate.parameter_slot >= params.size())
        fail(ErrorKind::kDomain, "rotation parameter slot out of range");
      apply_rotation(state, gate.kind, gate.target, params[*gate.parameter_slot]);
      return;
    }
  }
}

Complex pauli_expectation(const Statevector& state, std::uint64_t x_mask,
                          std::uint64_t z_mask) {
  // P|i> = i^{#Y} (-1)^{popcount(i & z)} |i ^ x>
  const auto amps = state.amplitudes();
  Complex sum{};
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const Complex term = std::conj(amps[i ^ x_mask]) * amps[i];
    sum += (std::popcount(i & z_mask) & 1U) ? -term : term;
  }
  switch (std::popcount(x_mask & z_mask) & 3U) {
    case 1: return {-sum.imag(), sum.real()};
    case 2: return -sum;
    case 3: return {sum.imag(), -sum.real()};
    default: return sum;
  }
}

Complex expectation_complex(const Statevector& state,
                            const PauliOperatorSum& op) {
  if (op.n_qubits() != state.n_qubits())
    fail(ErrorKind::kDomain, "operator acts on " + std::to_string(op.n_qubits()) +
                                 " qubits, state has " +
                                 std::to_string(state.n_qubits()));
  Complex total{};
  for (const auto& [key, coeff] : op.terms()) {
    // States are unit norm, so the identity contributes its coefficient.
    if (key.first == 0 && key.second == 0) {
      total += coeff;
      continue;
    }
    total += coeff * pauli_expectation(state, key.first, key.second);
  }
  return total;
}

double expectation(const Statevector& state, const PauliOperatorSum& op) {
  return expectation_complex(state, op).real();
}

std::vector<double> probabilities(const Statevector& state) {
  std::vector<double> p(state.dimension());
  const auto amps = state.amplitudes();
  std::transform(amps.begin(), amps.end(), p.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return p;
}

std::map<std::uint64_t, std::uint64_t> sample_counts(const Statevector& state,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed) {
  if (shots == 0) fail(ErrorKind::kDomain, "shots must be at least 1");
  const auto p = probabilities(state);
  std::vector<double> cumulative(p.size());
  double run = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) cumulative[i] = run += p[i];
  Xoshiro256 rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * run;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    ++counts[static_cast<std::uint64_t>(it - cumulative.begin())];
  }
  return counts;
}

void write_statevector(std::ostream& out, const Statevector& state) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::setprecision(17);
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i)
    if (std::abs(amps[i]) > 1e-14)
      out << i << ' ' << amps[i].real() << ' ' << amps[i].imag() << '\n';
  out.flags(flags);
  out.precision(prec);
}

}  // namespace aqv
