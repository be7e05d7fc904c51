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


#include <random>

#include <gtest/gtest.h>

#include "aquavqe/ansatz.hpp"
#include "aquavqe/error.hpp"
#include "aquavqe/exact.hpp"
#include "aquavqe/fermion.hpp"
#include "oracle.hpp"

namespace {

using aqv::Complex;
using aqv::PauliOperatorSum;
using aqv::PauliTerm;

const std::string kWater = std::string(AQV_DATA_DIR) + "/fcidump/h2o_a104.5_r0.945.fcidump";

TEST(ToDense, SingleQubitCases) {
  PauliOperatorSum z(1);
  z.add(PauliTerm::from_string("Z"));
  Eigen::Matrix2cd expected;
  expected << 1, 0, 0, -1;
  EXPECT_EQ(aqv::to_dense(z), expected);
  PauliOperatorSum ix(1, 0.5);
  ix.add(PauliTerm::from_string("X", 0.5));
  expected << 0.5, 0.5, 0.5, 0.5;
  EXPECT_EQ(aqv::to_dense(ix), expected);
}

TEST(ToDense, MatchesKroneckerOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 30; ++t) {
    PauliOperatorSum op(3);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(8, 8);
    for (int k = 0; k < 10; ++k) {
      const auto axes = oracle::random_axes(3, rng);
      const double c = u(rng);
      op.add(PauliTerm::from_string(axes, c));
      expected += c * oracle::pauli_string_matrix(axes);
    }
    const auto m = aqv::to_dense(op);
    EXPECT_LT((m - expected).norm(), 1e-12);
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ToDense, SizeGuard) {
  try {
    aqv::to_dense(PauliOperatorSum(13, 1.0));
    FAIL();
  } catch (const aqv::Error& e) {
    EXPECT_EQ(e.kind(), aqv::ErrorKind::kResource);
  }
}

TEST(GroundState, MinusZ) {
  PauliOperatorSum h(1);
  h.add(PauliTerm::from_string("Z", -1.0));
  const auto r = aqv::ground_state(h, std::nullopt, true);
  EXPECT_NEAR(r.ground_energy, -1.0, 1e-15);
  // Z|0> = |0>, so -Z is lowest on |0>.
  EXPECT_NEAR(std::abs(r.ground_vector(0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(r.ground_vector(1)), 0.0, 1e-15);
  PauliOperatorSum plus(1);
  plus.add(PauliTerm::from_string("Z", 1.0));
  EXPECT_NEAR(std::abs(aqv::ground_state(plus, std::nullopt, true).ground_vector(1)),
              1.0, 1e-15);
  EXPECT_FALSE(r.sector_filtered);
}

TEST(GroundState, DegenerateIdentity) {
  const auto r = aqv::ground_state(PauliOperatorSum(3, -0.25), std::nullopt, true);
  EXPECT_NEAR(r.ground_energy, -0.25, 1e-15);
  EXPECT_EQ(r.ground_vector.size(), 8);
}

TEST(GroundState, WaterMatchesFockOracle) {
  const auto reduced =
      aqv::reduce_active_space(aqv::load_fcidump(kWater), aqv::default_water_active_space());
  const auto h = aqv::jordan_wigner(reduced);
  const auto g = oracle::integrals_of(reduced);
  const double fock = oracle::sorted_eigenvalues(oracle::fock_matrix(g, oracle::all_dets(3)))(0);
  EXPECT_NEAR(aqv::ground_state(h).ground_energy, fock, 1e-8);
  const double fock4 =
      oracle::sorted_eigenvalues(oracle::fock_matrix(g, oracle::dets_with(3, 2, 2)))(0);
  const auto sector = aqv::ground_state(h, 4);
  EXPECT_TRUE(sector.sector_filtered);
  EXPECT_NEAR(sector.ground_energy, fock4, 1e-8);
}

TEST(GroundState, SectorNeverBelowGlobalAndResidualSmall) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto h = aqv::jordan_wigner(oracle::to_hamiltonian(oracle::random_integrals(2, rng), 1, 1));
    const auto global = aqv::ground_state(h, std::nullopt, true);
    const auto m = aqv::to_dense(h);
    const double residual =
        (m * global.ground_vector - global.ground_energy * global.ground_vector).norm();
    EXPECT_LT(residual, 1e-8 * h.max_abs_coefficient() * static_cast<double>(h.size()));
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto s = aqv::ground_state(h, n, true);
      EXPECT_GE(s.ground_energy, global.ground_energy - 1e-12);
      const auto number = aqv::to_dense(aqv::total_number_operator(4));
      const Complex occ = s.ground_vector.dot(number * s.ground_vector);
      EXPECT_NEAR(occ.real(), static_cast<double>(n), 1e-6);
    }
  }
}

TEST(GroundState, VariationalAgainstAnsatzStates) {
  const auto reduced =
      aqv::reduce_active_space(aqv::load_fcidump(kWater), aqv::default_water_active_space());
  const auto h = aqv::jordan_wigner(reduced);
  const double e0 = aqv::ground_state(h).ground_energy;
  const aqv::AnsatzCircuit c(6, 2, aqv::HFReference::closed_shell(6, 2, 2));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.2, 3.2);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> theta(c.n_params());
    for (auto& v : theta) v = u(rng);
    EXPECT_GE(aqv::ansatz_energy(c, h, theta), e0 - 1e-9);
  }
}

TEST(GroundState, EmptySector) {
  PauliOperatorSum h(2, 1.0);
  try {
    aqv::ground_state(h, 3);
    FAIL();
  } catch (const aqv::Error& e) {
    EXPECT_EQ(e.kind(), aqv::ErrorKind::kSector);
  }
}

}  // namespace
