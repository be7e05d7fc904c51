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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace aqv {

/// Chemists'-notation two-electron integrals (pq|rs) over n spatial orbitals,
/// stored densely. Writes go through set_symmetric so the 8-fold permutational
/// symmetry always holds.
class TwoBodyTensor {
 public:
  TwoBodyTensor() = default;
  explicit TwoBodyTensor(std::size_t n) : n_(n), data_(n * n * n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t p, std::size_t q, std::size_t r,
                    std::size_t s) const noexcept {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  void set_symmetric(std::size_t p, std::size_t q, std::size_t r,
                     std::size_t s, double value) noexcept;
  double max_asymmetry() const noexcept;

 private:
  double& at(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Second-quantized electronic Hamiltonian over spatial orbitals:
///   H = e_core + sum_pq h_pq E_pq + 1/2 sum_pqrs (pq|rs) (E_pq E_rs - delta_qr E_ps)
/// Immutable once constructed; the constructor checks the symmetry and
/// electron-count invariants.
class FermionicHamiltonian {
 public:
  FermionicHamiltonian(std::size_t n_alpha, std::size_t n_beta, double e_core,
                       Eigen::MatrixXd h1, TwoBodyTensor h2);

  std::size_t n_spatial() const noexcept { return h2_.size(); }
  std::size_t n_alpha() const noexcept { return n_alpha_; }
  std::size_t n_beta() const noexcept { return n_beta_; }
  std::size_t n_electrons() const noexcept { return n_alpha_ + n_beta_; }
  double e_core() const noexcept { return e_core_; }
  const Eigen::MatrixXd& h1() const noexcept { return h1_; }
  const TwoBodyTensor& h2() const noexcept { return h2_; }

 private:
  std::size_t n_alpha_;
  std::size_t n_beta_;
  double e_core_;
  Eigen::MatrixXd h1_;
  TwoBodyTensor h2_;
};

/// Orbital selection for frozen-core / virtual-removal reduction. Indices are
/// 0-based spatial orbitals.
struct ActiveSpaceSpec {
  std::vector<std::size_t> frozen;
  std::vector<std::size_t> removed;

  bool empty() const noexcept { return frozen.empty() && removed.empty(); }
};

/// Parses FCIDUMP text. Header fields other than NORB, NELEC and MS2 are
/// accepted and ignored.
FermionicHamiltonian parse_fcidump(std::string_view text);
FermionicHamiltonian load_fcidump(const std::string& path);

/// Writes the unique (p>=q, r>=s, pq>=rs) integrals with 17 significant digits.
void write_fcidump(std::ostream& out, const FermionicHamiltonian& h);
std::string to_fcidump(const FermionicHamiltonian& h);

/// Folds the frozen orbitals into the core energy and an effective one-body
/// operator, then drops frozen and removed orbitals. Frozen orbitals must be
/// doubly occupied and removed orbitals empty under aufbau filling by index.
FermionicHamiltonian reduce_active_space(const FermionicHamiltonian& h,
                                         const ActiveSpaceSpec& spec);

/// Frozen {0,1,2}, removed {6}: three active orbitals (HOMO-1, HOMO, LUMO)
/// and four active electrons for the bundled water fixtures.
ActiveSpaceSpec default_water_active_space();

}  // namespace aqv
