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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "aquavqe/fermion.hpp"

namespace aqv {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Tensor product of single-qubit Paulis times a complex coefficient. Qubit k
/// is encoded in bit k of the x and z masks: X=(1,0), Z=(0,1), Y=(1,1) where
/// Y denotes the Hermitian Pauli matrix itself (not XZ).
class PauliTerm {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  PauliTerm() = default;
  PauliTerm(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
            Complex coefficient = 1.0);
  /// Parses an axes string such as "IXYZ"; character k labels qubit k.
  static PauliTerm from_string(std::string_view axes, Complex coefficient = 1.0);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  Complex coefficient() const noexcept { return coeff_; }
  Pauli axis(std::size_t qubit) const noexcept;
  std::string axes() const;
  bool is_identity() const noexcept { return x_ == 0 && z_ == 0; }

 private:
  std::size_t n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  Complex coeff_{1.0, 0.0};
};

/// Product a*b with the single-qubit phases (XY = iZ and cyclic) tracked.
PauliTerm pauli_multiply(const PauliTerm& a, const PauliTerm& b);

/// Sum of Pauli strings with like terms merged. Terms are kept in a map keyed
/// by (x_mask, z_mask) so iteration order is deterministic.
class PauliOperatorSum {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  static constexpr double kPruneThreshold = 1e-12;

  PauliOperatorSum() = default;
  explicit PauliOperatorSum(std::size_t n_qubits);
  PauliOperatorSum(std::size_t n_qubits, Complex identity_coefficient);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::map<Key, Complex>& terms() const noexcept { return terms_; }
  PauliTerm term(const std::map<Key, Complex>::value_type& entry) const {
    return {n_qubits_, entry.first.first, entry.first.second, entry.second};
  }
  /// Coefficient of the given axes pattern, zero if absent.
  Complex coefficient(std::string_view axes) const;

  PauliOperatorSum& add(const PauliTerm& t);
  PauliOperatorSum& operator+=(const PauliOperatorSum& other);
  PauliOperatorSum& operator-=(const PauliOperatorSum& other);
  PauliOperatorSum& operator*=(Complex scale);
  /// Drops terms whose |coefficient| falls below the threshold.
  PauliOperatorSum& prune(double threshold = kPruneThreshold);

  PauliOperatorSum adjoint() const;
  double max_imaginary() const noexcept;
  double max_abs_coefficient() const noexcept;
  /// Largest |c| over terms of (this - other).
  double distance(const PauliOperatorSum& other) const;

 private:
  std::size_t n_qubits_ = 0;
  std::map<Key, Complex> terms_;
};

PauliOperatorSum operator+(PauliOperatorSum a, const PauliOperatorSum& b);
PauliOperatorSum operator-(PauliOperatorSum a, const PauliOperatorSum& b);
PauliOperatorSum operator*(const PauliOperatorSum& a, const PauliOperatorSum& b);
PauliOperatorSum operator*(Complex s, PauliOperatorSum a);

/// Jordan-Wigner image of a_p (dagger=false) or a_p^dagger on n_qubits modes:
/// (X_p +/- iY_p)/2 preceded by a Z string on modes 0..p-1.
PauliOperatorSum jw_ladder(std::size_t n_qubits, std::size_t mode, bool dagger);

/// Spin-orbital to qubit layout. Blocked puts (p, alpha) on qubit p and
/// (p, beta) on qubit n_spatial + p; interleaved uses 2p and 2p + 1.
enum class SpinOrdering { kBlocked, kInterleaved };

inline std::size_t spin_orbital_qubit(SpinOrdering ordering,
                                      std::size_t n_spatial, std::size_t p,
                                      bool beta) noexcept {
  if (ordering == SpinOrdering::kInterleaved) return 2 * p + (beta ? 1 : 0);
  return beta ? n_spatial + p : p;
}

/// Qubit Hamiltonian of h. Fails with a consistency error if any coefficient
/// keeps an imaginary part above 1e-10.
PauliOperatorSum jordan_wigner(const FermionicHamiltonian& h,
                               SpinOrdering ordering = SpinOrdering::kBlocked);

/// sum_p (I - Z_p)/2.
PauliOperatorSum total_number_operator(std::size_t n_qubits);

/// One `<coeff> <axes>` line per term; real coefficients print as a single
/// number, complex ones as `(re,im)`.
void write_text(std::ostream& out, const PauliOperatorSum& op);
std::string to_text(const PauliOperatorSum& op);
PauliOperatorSum parse_text(std::string_view text);

}  // namespace aqv
