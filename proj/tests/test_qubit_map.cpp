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

#include "aquavqe/error.hpp"
#include "aquavqe/exact.hpp"
#include "aquavqe/pauli.hpp"
#include "oracle.hpp"

namespace {

using aqv::Complex;
using aqv::PauliOperatorSum;
using aqv::PauliTerm;

Eigen::MatrixXcd dense_term(const PauliTerm& t) {
  return t.coefficient() * oracle::pauli_string_matrix(t.axes());
}

Eigen::MatrixXcd dense_sum(const PauliOperatorSum& op) {
  const auto dim = std::size_t{1} << op.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& entry : op.terms()) m += dense_term(op.term(entry));
  return m;
}

std::string all_axes(std::size_t n, std::size_t code) {
  static constexpr char kAxes[] = {'I', 'X', 'Y', 'Z'};
  std::string s(n, 'I');
  for (std::size_t k = 0; k < n; ++k, code /= 4) s[k] = kAxes[code % 4];
  return s;
}

TEST(PauliMultiply, XTimesYIsIZ) {
  const auto p = aqv::pauli_multiply(PauliTerm::from_string("X"),
                                     PauliTerm::from_string("Y"));
  EXPECT_EQ(p.axes(), "Z");
  EXPECT_EQ(p.coefficient(), Complex(0, 1));
}

TEST(PauliMultiply, ZIsAnInvolution) {
  const auto p = aqv::pauli_multiply(PauliTerm::from_string("ZI"),
                                     PauliTerm::from_string("ZI"));
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.coefficient(), Complex(1, 0));
}

TEST(PauliMultiply, ExhaustiveUpToThreeQubitsMatchesDense) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t count = std::size_t{1} << (2 * n);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        const auto a = PauliTerm::from_string(all_axes(n, i), Complex(0.5, -0.25));
        const auto b = PauliTerm::from_string(all_axes(n, j), Complex(-1.5, 2.0));
        const auto p = aqv::pauli_multiply(a, b);
        ASSERT_LT((dense_term(p) - dense_term(a) * dense_term(b)).norm(), 1e-12)
            << a.axes() << " * " << b.axes();
      }
  }
}

TEST(PauliMultiply, RandomFourAndFiveQubitMatchDenseAndAssociate) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {4u, 5u})
    for (int t = 0; t < 200; ++t) {
      const auto a = PauliTerm::from_string(oracle::random_axes(n, rng));
      const auto b = PauliTerm::from_string(oracle::random_axes(n, rng), Complex(0, 2));
      const auto c = PauliTerm::from_string(oracle::random_axes(n, rng), -0.5);
      const auto ab = aqv::pauli_multiply(a, b);
      EXPECT_LT((dense_term(ab) - dense_term(a) * dense_term(b)).norm(), 1e-12);
      const auto left = aqv::pauli_multiply(ab, c);
      const auto right = aqv::pauli_multiply(a, aqv::pauli_multiply(b, c));
      EXPECT_EQ(left.axes(), right.axes());
      EXPECT_LT(std::abs(left.coefficient() - right.coefficient()), 1e-15);
    }
}

TEST(PauliMultiply, MismatchedSizes) {
  try {
    aqv::pauli_multiply(PauliTerm::from_string("X"), PauliTerm::from_string("XX"));
    FAIL();
  } catch (const aqv::Error& e) {
    EXPECT_EQ(e.kind(), aqv::ErrorKind::kDomain);
  }
}

TEST(PauliSum, MergesAndPrunesLikeTerms) {
  PauliOperatorSum s(2);
  s.add(PauliTerm::from_string("XZ", 0.5));
  s.add(PauliTerm::from_string("XZ", 0.25));
  s.add(PauliTerm::from_string("IY", 1e-13));
  EXPECT_EQ(s.size(), 2u);
  s.prune();
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficient("XZ"), Complex(0.75));
  EXPECT_EQ(s.coefficient("ZZ"), Complex(0.0));
}

TEST(PauliSum, TextRoundTrip) {
  PauliOperatorSum s(3);
  s.add(PauliTerm::from_string("IZI", -0.5));
  s.add(PauliTerm::from_string("XYZ", 0.125));
  s.add(PauliTerm::from_string("III", 1.0 / 3.0));
  s.add(PauliTerm::from_string("YII", Complex(0.0, 2.0)));
  const auto back = aqv::parse_text(aqv::to_text(s));
  EXPECT_EQ(back.n_qubits(), 3u);
  EXPECT_EQ(back.distance(s), 0.0);
  EXPECT_NE(aqv::to_text(s).find("-0.5 IZI"), std::string::npos);
}

TEST(JordanWigner, OneOrbitalNumberOperator) {
  Eigen::MatrixXd h1(1, 1);
  h1 << 0.8;
  const aqv::FermionicHamiltonian h(1, 0, 0.0, h1, aqv::TwoBodyTensor(1));
  const auto q = aqv::jordan_wigner(h);
  EXPECT_EQ(q.size(), 3u);
  EXPECT_NEAR(q.coefficient("II").real(), 0.8, 1e-15);
  EXPECT_NEAR(q.coefficient("ZI").real(), -0.4, 1e-15);
  EXPECT_NEAR(q.coefficient("IZ").real(), -0.4, 1e-15);
}

TEST(JordanWigner, CoreEnergyOnly) {
  const aqv::FermionicHamiltonian h(1, 1, -3.5, Eigen::MatrixXd::Zero(2, 2),
                                    aqv::TwoBodyTensor(2));
  const auto q = aqv::jordan_wigner(h);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q.coefficient("IIII"), Complex(-3.5));
}

TEST(JordanWigner, BlockedHartreeFockLayout) {
  // One-body diagonal only: the energy of a basis state is the sum of the
  // orbital energies of its set bits, alpha block first.
  Eigen::MatrixXd h1 = Eigen::MatrixXd::Zero(2, 2);
  h1(0, 0) = -1.0;
  h1(1, 1) = -0.25;
  const aqv::FermionicHamiltonian h(1, 1, 0.0, h1, aqv::TwoBodyTensor(2));
  const auto m = aqv::to_dense(aqv::jordan_wigner(h));
  // Qubits 0,1 = alpha orbitals 0,1; qubits 2,3 = beta orbitals 0,1.
  EXPECT_NEAR(m(0b0101, 0b0101).real(), -2.0, 1e-14);
  EXPECT_NEAR(m(0b0011, 0b0011).real(), -1.25, 1e-14);
  EXPECT_NEAR(m(0b1010, 0b1010).real(), -0.5, 1e-14);
  const auto mi = aqv::to_dense(aqv::jordan_wigner(h, aqv::SpinOrdering::kInterleaved));
  EXPECT_NEAR(mi(0b0011, 0b0011).real(), -2.0, 1e-14);
}

TEST(JordanWigner, CanonicalAnticommutation) {
  const std::size_t n = 3;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const auto ap = aqv::jw_ladder(n, p, false);
      const auto aq_dag = aqv::jw_ladder(n, q, true);
      auto anti = ap * aq_dag + aq_dag * ap;
      anti.prune();
      const PauliOperatorSum expected(n, p == q ? Complex(1.0) : Complex(0.0));
      EXPECT_LT(anti.distance(expected), 1e-14) << p << "," << q;
      auto aa = ap * aqv::jw_ladder(n, q, false) + aqv::jw_ladder(n, q, false) * ap;
      aa.prune();
      EXPECT_TRUE(aa.empty());
    }
}

TEST(JordanWigner, HermitianRealCoefficients) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    const auto h = oracle::to_hamiltonian(oracle::random_integrals(3, rng), 1, 2);
    const auto q = aqv::jordan_wigner(h);
    EXPECT_EQ(q.max_imaginary(), 0.0);
    const auto m = dense_sum(q);
    EXPECT_LT((m - m.adjoint()).norm(), 1e-12);
  }
}

TEST(JordanWigner, SpectrumMatchesFockOracle) {
  std::mt19937_64 rng(99);
  for (std::size_t n : {1u, 2u, 3u})
    for (int t = 0; t < 10; ++t) {
      const auto g = oracle::random_integrals(n, rng);
      const auto h = oracle::to_hamiltonian(g, 1, 0);
      const auto expected =
          oracle::sorted_eigenvalues(oracle::fock_matrix(g, oracle::all_dets(n)));
      for (auto ordering : {aqv::SpinOrdering::kBlocked, aqv::SpinOrdering::kInterleaved}) {
        const auto got =
            oracle::sorted_eigenvalues(dense_sum(aqv::jordan_wigner(h, ordering)));
        EXPECT_LT((got - expected).cwiseAbs().maxCoeff(), 1e-9);
      }
    }
}

TEST(JordanWigner, RejectsTooManyOrbitals) {
  aqv::TwoBodyTensor t(17);
  const aqv::FermionicHamiltonian h(1, 1, 0.0, Eigen::MatrixXd::Zero(17, 17), t);
  try {
    aqv::jordan_wigner(h);
    FAIL();
  } catch (const aqv::Error& e) {
    EXPECT_EQ(e.kind(), aqv::ErrorKind::kDomain);
  }
}

TEST(NumberOperator, SmallCases) {
  const auto n1 = aqv::total_number_operator(1);
  EXPECT_EQ(n1.coefficient("I"), Complex(0.5));
  EXPECT_EQ(n1.coefficient("Z"), Complex(-0.5));
  const auto n2 = aqv::total_number_operator(2);
  EXPECT_EQ(n2.size(), 3u);
  EXPECT_EQ(n2.coefficient("II"), Complex(1.0));
  EXPECT_EQ(n2.coefficient("ZI"), Complex(-0.5));
  EXPECT_EQ(n2.coefficient("IZ"), Complex(-0.5));
  // |0101> read with qubit 0 first: qubits 1 and 3 occupied.
  const auto m = dense_sum(aqv::total_number_operator(4));
  EXPECT_NEAR(m(0b1010, 0b1010).real(), 2.0, 1e-15);
}

}  // namespace
