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


// Reference implementations the tests compare the library against. Nothing
// here goes through the library's Pauli or Jordan-Wigner code.

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "aquavqe/fermion.hpp"

namespace oracle {

using cd = std::complex<double>;

// Raw integrals: h1[p*n+q], h2[((p*n+q)*n+r)*n+s] in chemists' notation.
struct Integrals {
  std::size_t n = 0;
  double e_core = 0.0;
  std::vector<double> h1;
  std::vector<double> h2;
  double one(std::size_t p, std::size_t q) const { return h1[p * n + q]; }
  double two(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return h2[((p * n + q) * n + r) * n + s];
  }
};

inline Integrals integrals_of(const aqv::FermionicHamiltonian& h) {
  Integrals out;
  out.n = h.n_spatial();
  out.e_core = h.e_core();
  const auto n = out.n;
  out.h1.resize(n * n);
  out.h2.resize(n * n * n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      out.h1[p * n + q] = h.h1()(p, q);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          out.h2[((p * n + q) * n + r) * n + s] = h.h2()(p, q, r, s);
    }
  return out;
}

// Random integrals with the 8-fold symmetry imposed by averaging.
inline Integrals random_integrals(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Integrals g;
  g.n = n;
  g.e_core = u(rng);
  g.h1.assign(n * n, 0.0);
  g.h2.assign(n * n * n * n, 0.0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q) g.h1[p * n + q] = g.h1[q * n + p] = u(rng);
  std::vector<double> raw(g.h2.size());
  for (auto& v : raw) v = 0.5 * u(rng);
  auto idx = [n](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return ((p * n + q) * n + r) * n + s;
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          g.h2[idx(p, q, r, s)] =
              (raw[idx(p, q, r, s)] + raw[idx(q, p, r, s)] + raw[idx(p, q, s, r)] +
               raw[idx(q, p, s, r)] + raw[idx(r, s, p, q)] + raw[idx(s, r, p, q)] +
               raw[idx(r, s, q, p)] + raw[idx(s, r, q, p)]) /
              8.0;
  return g;
}

inline aqv::FermionicHamiltonian to_hamiltonian(const Integrals& g,
                                                std::size_t n_alpha,
                                                std::size_t n_beta) {
  const auto n = g.n;
  Eigen::MatrixXd h1(n, n);
  aqv::TwoBodyTensor h2(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      h1(p, q) = g.one(p, q);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          h2.set_symmetric(p, q, r, s, g.two(p, q, r, s));
    }
  return aqv::FermionicHamiltonian(n_alpha, n_beta, g.e_core, h1, h2);
}

// Occupation-number determinants. Mode 2p + spin, spin 0 = alpha; the sign of
// a ladder operator counts occupied modes of lower index.
struct Det {
  std::uint64_t bits;
  double sign;
};

inline bool annihilate(std::size_t mode, Det& d) {
  if (!((d.bits >> mode) & 1)) return false;
  const auto below = d.bits & ((std::uint64_t{1} << mode) - 1);
  if (std::popcount(below) % 2) d.sign = -d.sign;
  d.bits &= ~(std::uint64_t{1} << mode);
  return true;
}

inline bool create(std::size_t mode, Det& d) {
  if ((d.bits >> mode) & 1) return false;
  const auto below = d.bits & ((std::uint64_t{1} << mode) - 1);
  if (std::popcount(below) % 2) d.sign = -d.sign;
  d.bits |= std::uint64_t{1} << mode;
  return true;
}

// H|det> as a map from determinant to amplitude.
inline std::map<std::uint64_t, double> apply_hamiltonian(const Integrals& g,
                                                         std::uint64_t det) {
  std::map<std::uint64_t, double> out;
  const auto n = g.n;
  out[det] += g.e_core;
  auto mode = [](std::size_t p, int spin) { return 2 * p + spin; };
  for (int s = 0; s < 2; ++s)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const double v = g.one(p, q);
        if (v == 0.0) continue;
        Det d{det, 1.0};
        if (annihilate(mode(q, s), d) && create(mode(p, s), d))
          out[d.bits] += v * d.sign;
      }
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t u = 0; u < n; ++u) {
              const double v = g.two(p, q, r, u);
              if (v == 0.0) continue;
              // a+_{p s} a+_{r t} a_{u t} a_{q s}
              Det d{det, 1.0};
              if (annihilate(mode(q, s), d) && annihilate(mode(u, t), d) &&
                  create(mode(r, t), d) && create(mode(p, s), d))
                out[d.bits] += 0.5 * v * d.sign;
            }
  return out;
}

// Matrix of H over the given determinants (others are projected out).
inline Eigen::MatrixXd fock_matrix(const Integrals& g,
                                   const std::vector<std::uint64_t>& dets) {
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < dets.size(); ++i) index[dets[i]] = i;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dets.size(), dets.size());
  for (std::size_t j = 0; j < dets.size(); ++j)
    for (const auto& [bits, v] : apply_hamiltonian(g, dets[j]))
      if (auto it = index.find(bits); it != index.end()) m(it->second, j) += v;
  return m;
}

inline std::vector<std::uint64_t> all_dets(std::size_t n_spatial) {
  std::vector<std::uint64_t> out(std::size_t{1} << (2 * n_spatial));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

inline std::vector<std::uint64_t> dets_with(std::size_t n_spatial,
                                            std::size_t n_alpha,
                                            std::size_t n_beta) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << (2 * n_spatial)); ++b) {
    std::size_t na = 0, nb = 0;
    for (std::size_t p = 0; p < n_spatial; ++p) {
      na += (b >> (2 * p)) & 1;
      nb += (b >> (2 * p + 1)) & 1;
    }
    if (na == n_alpha && nb == n_beta) out.push_back(b);
  }
  return out;
}

inline std::uint64_t aufbau_det(std::size_t n_alpha, std::size_t n_beta) {
  std::uint64_t b = 0;
  for (std::size_t p = 0; p < n_alpha; ++p) b |= std::uint64_t{1} << (2 * p);
  for (std::size_t p = 0; p < n_beta; ++p) b |= std::uint64_t{1} << (2 * p + 1);
  return b;
}

inline double determinant_energy(const Integrals& g, std::uint64_t det) {
  return fock_matrix(g, {det})(0, 0);
}

inline Eigen::VectorXd sorted_eigenvalues(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

inline Eigen::VectorXd sorted_eigenvalues(const Eigen::MatrixXcd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m).eigenvalues();
}

// Dense matrices by Kronecker products; qubit 0 is the rightmost factor.
inline Eigen::Matrix2cd pauli_matrix(char axis) {
  Eigen::Matrix2cd m;
  switch (axis) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// axes[k] acts on qubit k.
inline Eigen::MatrixXcd pauli_string_matrix(const std::string& axes) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char a : axes) m = kron(pauli_matrix(a), m);
  return m;
}

inline Eigen::MatrixXcd single_qubit_operator(std::size_t n, std::size_t q,
                                              const Eigen::Matrix2cd& u) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t k = 0; k < n; ++k)
    m = kron(k == q ? Eigen::MatrixXcd(u) : Eigen::MatrixXcd::Identity(2, 2), m);
  return m;
}

inline Eigen::Matrix2cd ry_matrix(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

inline Eigen::Matrix2cd rz_matrix(double t) {
  Eigen::Matrix2cd m;
  m << std::exp(cd(0, -t / 2)), 0, 0, std::exp(cd(0, t / 2));
  return m;
}

inline Eigen::MatrixXcd cnot_matrix(std::size_t n, std::size_t control,
                                    std::size_t target) {
  Eigen::Matrix2cd p0, p1;
  p0 << 1, 0, 0, 0;
  p1 << 0, 0, 0, 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(1, 1);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    a = kron(k == control ? Eigen::MatrixXcd(p0) : Eigen::MatrixXcd::Identity(2, 2), a);
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(2, 2);
    if (k == control) f = p1;
    if (k == target) f = pauli_matrix('X');
    b = kron(f, b);
  }
  return a + b;
}

inline std::string random_axes(std::size_t n, std::mt19937_64& rng) {
  static constexpr char kAxes[] = {'I', 'X', 'Y', 'Z'};
  std::string s(n, 'I');
  for (auto& c : s) c = kAxes[rng() % 4];
  return s;
}

inline Eigen::VectorXcd random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(std::size_t{1} << n);
  for (auto& a : v) a = cd(g(rng), g(rng));
  return v / v.norm();
}

}  // namespace oracle
