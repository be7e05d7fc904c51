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

#include "aquavqe/exact.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "aquavqe/error.hpp"
#include "aquavqe/statevector.hpp"

namespace aqv {

Eigen::MatrixXcd to_dense(const PauliOperatorSum& h) {
  const auto n = h.n_qubits();
  if (n > kDenseQubitLimit)
    fail(ErrorKind::kResource, "dense matrix limited to " +
                                   std::to_string(kDenseQubitLimit) +
                                   " qubits, operator has " + std::to_string(n));
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, coeff] : h.terms()) {
    const auto [x, z] = key;
    const int ny = std::popcount(x & z);
    static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex base = coeff * kIPow[ny & 3];
    for (std::uint64_t col = 0; col < dim; ++col) {
      const bool odd = std::popcount(col & z) & 1U;
      m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) +=
          odd ? -base : base;
    }
  }
  return m;
}

ExactResult ground_state(const PauliOperatorSum& h,
                         std::optional<std::size_t> sector, bool keep_vector) {
  const auto dense = to_dense(h);
  const auto dim = dense.rows();
  ExactResult result;
  result.sector_filtered = sector.has_value();
  result.n_particles_expected = sector;

  std::vector<Eigen::Index> basis;
  if (sector) {
    const auto number = total_number_operator(h.n_qubits());
    for (Eigen::Index i = 0; i < dim; ++i) {
      const auto state =
          Statevector::basis_state(h.n_qubits(), static_cast<std::uint64_t>(i));
      if (std::abs(expectation(state, number) - static_cast<double>(*sector)) <
          1e-6)
        basis.push_back(i);
    }
    if (basis.empty())
      fail(ErrorKind::kSector, "no eigenvector with " + std::to_string(*sector) +
                                   " particles on " +
                                   std::to_string(h.n_qubits()) + " qubits");
  } else {
    basis.resize(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) basis[static_cast<std::size_t>(i)] = i;
  }

  const auto m = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd block(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c)
      block(r, c) = dense(basis[r], basis[c]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      block, keep_vector ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    fail(ErrorKind::kConsistency, "Hermitian eigensolver did not converge");
  result.ground_energy = solver.eigenvalues()(0);
  if (keep_vector) {
    result.ground_vector = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index r = 0; r < m; ++r)
      result.ground_vector(basis[r]) = solver.eigenvectors()(r, 0);
  }
  return result;
}

}  // namespace aqv
