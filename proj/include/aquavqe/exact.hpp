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
#include <optional>

#include <Eigen/Dense>

#include "aquavqe/pauli.hpp"

namespace aqv {

struct ExactResult {
  double ground_energy = 0.0;
  Eigen::VectorXcd ground_vector;  // empty unless requested
  bool sector_filtered = false;
  std::optional<std::size_t> n_particles_expected;
};

inline constexpr std::size_t kDenseQubitLimit = 12;

/// sum_k c_k (sigma_k^{(n-1)} x ... x sigma_k^{(0)}) with qubit 0 as the least
/// significant index bit.
Eigen::MatrixXcd to_dense(const PauliOperatorSum& h);

/// Lowest eigenvalue of the dense matrix. With a sector the search is
/// restricted to basis states holding exactly that many particles (the number
/// operator is diagonal under Jordan-Wigner), which equals the lowest
/// eigenvalue whose eigenvector has <N> = sector.
ExactResult ground_state(const PauliOperatorSum& h,
                         std::optional<std::size_t> sector = std::nullopt,
                         bool keep_vector = false);

}  // namespace aqv
