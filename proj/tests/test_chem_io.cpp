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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "aquavqe/error.hpp"
#include "aquavqe/fermion.hpp"
#include "aquavqe/geometry.hpp"
#include "oracle.hpp"

namespace {

using aqv::ErrorKind;

const std::filesystem::path kData = AQV_DATA_DIR;

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const aqv::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected aqv::Error";
  return ErrorKind::kResource;
}

const char* kOneOrbital =
    "&FCI NORB=1,NELEC=2,MS2=0,\n"
    " ORBSYM=1,\n"
    " ISYM=1,\n"
    "&END\n"
    "0.5 1 1 1 1\n"
    "-1.0 1 1 0 0\n"
    "0.7 0 0 0 0\n";

TEST(Fcidump, ParsesMinimalRecordSet) {
  const auto h = aqv::parse_fcidump(kOneOrbital);
  EXPECT_EQ(h.n_spatial(), 1u);
  EXPECT_EQ(h.n_alpha(), 1u);
  EXPECT_EQ(h.n_beta(), 1u);
  EXPECT_DOUBLE_EQ(h.h2()(0, 0, 0, 0), 0.5);
  EXPECT_DOUBLE_EQ(h.h1()(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(h.e_core(), 0.7);
}

TEST(Fcidump, RepeatedIdenticalRecordIsIdempotent) {
  const std::string twice = std::string(kOneOrbital) + "0.5 1 1 1 1\n";
  const auto a = aqv::parse_fcidump(kOneOrbital);
  const auto b = aqv::parse_fcidump(twice);
  EXPECT_EQ(a.h2()(0, 0, 0, 0), b.h2()(0, 0, 0, 0));
  EXPECT_EQ(a.h1()(0, 0), b.h1()(0, 0));
}

TEST(Fcidump, ExpandsEightFoldSymmetry) {
  const auto h = aqv::parse_fcidump(
      "&FCI NORB=2,NELEC=2,MS2=0 /\n 0.25 2 1 2 2\n 0.1 2 1 0 0\n");
  for (auto [p, q, r, s] : {std::array<int, 4>{1, 0, 1, 1}, {0, 1, 1, 1},
                            {1, 1, 1, 0}, {1, 1, 0, 1}})
    EXPECT_DOUBLE_EQ(h.h2()(p, q, r, s), 0.25);
  EXPECT_DOUBLE_EQ(h.h1()(0, 1), 0.1);
  EXPECT_DOUBLE_EQ(h.h1()(1, 0), 0.1);
}

TEST(Fcidump, HeaderErrorNamesLine) {
  try {
    aqv::parse_fcidump("&FCI NORB=x,NELEC=2,MS2=0\n&END\n");
    FAIL();
  } catch (const aqv::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { aqv::parse_fcidump("NORB=1\n"); }), ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { aqv::parse_fcidump("&FCI NELEC=2,MS2=0\n&END\n"); }),
            ErrorKind::kParse);
  EXPECT_EQ(kind_of([] {
              aqv::parse_fcidump("&FCI NORB=1,NELEC=2,MS2=0\n&END\n0.5 1 1 1\n");
            }),
            ErrorKind::kParse);
}

TEST(Fcidump, IndexOutOfRange) {
  EXPECT_EQ(kind_of([] {
              aqv::parse_fcidump("&FCI NORB=1,NELEC=2,MS2=0\n&END\n0.5 2 1 1 1\n");
            }),
            ErrorKind::kIndex);
}

TEST(Fcidump, ConflictingDuplicate) {
  EXPECT_EQ(kind_of([] {
              aqv::parse_fcidump(
                  "&FCI NORB=2,NELEC=2,MS2=0\n&END\n0.5 1 2 1 1\n0.6 2 1 1 1\n");
            }),
            ErrorKind::kConsistency);
}

TEST(Fcidump, WaterFixtureCounts) {
  const auto h = aqv::load_fcidump((kData / "fcidump/h2o_a104.5_r0.945.fcidump").string());
  EXPECT_EQ(h.n_spatial(), 7u);
  EXPECT_EQ(h.n_alpha(), 5u);
  EXPECT_EQ(h.n_beta(), 5u);
}

TEST(Fcidump, SerializeRoundTripIsFixedPoint) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = oracle::random_integrals(3, rng);
    const auto h = oracle::to_hamiltonian(g, 2, 1);
    const auto once = aqv::parse_fcidump(aqv::to_fcidump(h));
    const auto twice = aqv::parse_fcidump(aqv::to_fcidump(once));
    EXPECT_EQ(once.n_alpha(), 2u);
    EXPECT_EQ(once.n_beta(), 1u);
    EXPECT_NEAR(once.e_core(), h.e_core(), 1e-12);
    EXPECT_EQ(aqv::to_fcidump(once), aqv::to_fcidump(twice));
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = 0; q < 3; ++q) {
        EXPECT_NEAR(once.h1()(p, q), h.h1()(p, q), 1e-12);
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t s = 0; s < 3; ++s)
            EXPECT_NEAR(once.h2()(p, q, r, s), h.h2()(p, q, r, s), 1e-12);
      }
  }
}

TEST(ActiveSpace, EmptySpecIsIdentity) {
  std::mt19937_64 rng(3);
  const auto h = oracle::to_hamiltonian(oracle::random_integrals(3, rng), 2, 2);
  const auto r = aqv::reduce_active_space(h, {});
  EXPECT_EQ(r.e_core(), h.e_core());
  EXPECT_EQ(r.n_alpha(), h.n_alpha());
  EXPECT_EQ(r.n_beta(), h.n_beta());
  EXPECT_EQ((r.h1() - h.h1()).norm(), 0.0);
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; q < 3; ++q)
      for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = 0; t < 3; ++t)
          EXPECT_EQ(r.h2()(p, q, s, t), h.h2()(p, q, s, t));
}

// Ground energy of the reduced Hamiltonian against the original restricted to
// determinants with the frozen orbitals doubly occupied.
void check_frozen_core(const oracle::Integrals& g, std::size_t n_alpha,
                       std::size_t n_beta, const std::vector<std::size_t>& frozen) {
  const auto h = oracle::to_hamiltonian(g, n_alpha, n_beta);
  const auto reduced = aqv::reduce_active_space(h, {frozen, {}});
  const auto rg = oracle::integrals_of(reduced);
  const auto reduced_dets =
      oracle::dets_with(reduced.n_spatial(), reduced.n_alpha(), reduced.n_beta());
  const double e_reduced =
      oracle::sorted_eigenvalues(oracle::fock_matrix(rg, reduced_dets))(0);

  std::vector<std::uint64_t> restricted;
  for (auto d : oracle::dets_with(g.n, n_alpha, n_beta)) {
    bool ok = true;
    for (auto f : frozen) ok = ok && ((d >> (2 * f)) & 3) == 3;
    if (ok) restricted.push_back(d);
  }
  const double e_full = oracle::sorted_eigenvalues(oracle::fock_matrix(g, restricted))(0);
  EXPECT_NEAR(e_reduced, e_full, 1e-9);
}

TEST(ActiveSpace, FreezingOneOfTwoOrbitalsMatchesOracle) {
  oracle::Integrals g;
  g.n = 2;
  g.e_core = 0.3;
  g.h1 = {-1.2, 0.15, 0.15, -0.4};
  g.h2.assign(16, 0.0);
  const auto h = oracle::to_hamiltonian(g, 1, 1);
  aqv::TwoBodyTensor t(2);
  t.set_symmetric(0, 0, 0, 0, 0.65);
  t.set_symmetric(1, 1, 1, 1, 0.55);
  t.set_symmetric(0, 0, 1, 1, 0.6);
  t.set_symmetric(0, 1, 0, 1, 0.18);
  t.set_symmetric(0, 0, 0, 1, 0.05);
  t.set_symmetric(0, 1, 1, 1, -0.03);
  const aqv::FermionicHamiltonian hand(2, 2, g.e_core, h.h1(), t);
  check_frozen_core(oracle::integrals_of(hand), 2, 2, {0});
}

TEST(ActiveSpace, RandomFrozenSetsMatchOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::random_integrals(3, rng);
    check_frozen_core(g, 2, 2, {0});
    check_frozen_core(g, 3, 2, {0, 1});
  }
}

TEST(ActiveSpace, WaterDefaultGivesSixSpinOrbitals) {
  const auto h = aqv::load_fcidump((kData / "fcidump/h2o_a104.5_r0.945.fcidump").string());
  const auto r = aqv::reduce_active_space(h, aqv::default_water_active_space());
  EXPECT_EQ(2 * r.n_spatial(), 6u);
  EXPECT_EQ(r.n_alpha(), 2u);
  EXPECT_EQ(r.n_beta(), 2u);
}

TEST(ActiveSpace, WaterReductionMatchesRestrictedFci) {
  const auto h = aqv::load_fcidump((kData / "fcidump/h2o_a104.5_r0.945.fcidump").string());
  const auto g = oracle::integrals_of(h);
  const auto r = aqv::reduce_active_space(h, aqv::default_water_active_space());
  const auto rg = oracle::integrals_of(r);
  const double e_reduced =
      oracle::sorted_eigenvalues(oracle::fock_matrix(rg, oracle::dets_with(3, 2, 2)))(0);
  std::vector<std::uint64_t> restricted;
  for (auto d : oracle::dets_with(3, 2, 2)) {
    // Active orbitals 0..2 sit at full-space orbitals 3..5.
    std::uint64_t full = 0x3f;  // orbitals 0..2 doubly occupied
    full |= d << 6;
    restricted.push_back(full);
  }
  const double e_full = oracle::sorted_eigenvalues(oracle::fock_matrix(g, restricted))(0);
  EXPECT_NEAR(e_reduced, e_full, 1e-9);
  EXPECT_NEAR(oracle::determinant_energy(rg, oracle::aufbau_det(2, 2)),
              oracle::determinant_energy(g, oracle::aufbau_det(5, 5)), 1e-9);
}

TEST(ActiveSpace, RejectsInvalidSpecs) {
  std::mt19937_64 rng(5);
  const auto h = oracle::to_hamiltonian(oracle::random_integrals(3, rng), 2, 2);
  EXPECT_EQ(kind_of([&] { aqv::reduce_active_space(h, {{2}, {}}); }),
            ErrorKind::kDomain);
  EXPECT_EQ(kind_of([&] { aqv::reduce_active_space(h, {{}, {0}}); }),
            ErrorKind::kDomain);
  EXPECT_EQ(kind_of([&] { aqv::reduce_active_space(h, {{0}, {0}}); }),
            ErrorKind::kDomain);
  EXPECT_EQ(kind_of([&] { aqv::reduce_active_space(h, {{5}, {}}); }),
            ErrorKind::kDomain);
  // Orbital 2 is occupied under aufbau filling of three electrons per spin.
  const auto h4 = oracle::to_hamiltonian(oracle::random_integrals(4, rng), 3, 3);
  EXPECT_EQ(kind_of([&] { aqv::reduce_active_space(h4, {{0}, {3, 2}}); }),
            ErrorKind::kDomain);
}

TEST(Geometry, RightAngle) {
  const auto g = aqv::build_geometry(90.0, 1.0);
  EXPECT_NEAR(g.hydrogen1[0], 0.7071067812, 1e-10);
  EXPECT_NEAR(g.hydrogen1[1], 0.7071067812, 1e-10);
  EXPECT_EQ(g.hydrogen1[2], 0.0);
}

TEST(Geometry, Linear) {
  const auto g = aqv::build_geometry(180.0, 1.0);
  EXPECT_NEAR(g.hydrogen1[0], 1.0, 1e-15);
  EXPECT_EQ(g.hydrogen1[1], 0.0);
  EXPECT_NEAR(g.hydrogen2[0], -1.0, 1e-15);
  EXPECT_EQ(g.hydrogen2[1], 0.0);
}

TEST(Geometry, ExperimentalHHDistance) {
  const auto g = aqv::build_geometry(104.5, 0.945);
  EXPECT_NEAR(aqv::distance(g.hydrogen1, g.hydrogen2), 1.4944, 5e-5);
  EXPECT_NEAR(aqv::distance(g.hydrogen1, g.hydrogen2),
              2 * 0.945 * std::sin(52.25 * M_PI / 180.0), 1e-12);
}

TEST(Geometry, BondLengthsAndAngleHoldEverywhere) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(1.0, 179.0), length(0.3, 3.0);
  for (int i = 0; i < 500; ++i) {
    const double t = angle(rng), r = length(rng);
    const auto g = aqv::build_geometry(t, r);
    EXPECT_NEAR(aqv::distance(g.oxygen, g.hydrogen1), r, 1e-12);
    EXPECT_NEAR(aqv::distance(g.oxygen, g.hydrogen2), r, 1e-12);
    EXPECT_NEAR(aqv::angle_deg(g.hydrogen1, g.oxygen, g.hydrogen2), t, 1e-10);
  }
}

TEST(Geometry, RejectsOutOfRange) {
  for (auto [t, r] : {std::pair{0.0, 1.0}, {-5.0, 1.0}, {181.0, 1.0}, {90.0, 0.0},
                      {90.0, -1.0}, {NAN, 1.0}})
    EXPECT_EQ(kind_of([&] { aqv::build_geometry(t, r); }), ErrorKind::kDomain);
}

TEST(Manifest, SingleEntry) {
  const auto m = aqv::load_manifest(kData / "reference.manifest");
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_DOUBLE_EQ(m.entries[0].geometry.bond_angle, 104.5);
  EXPECT_DOUBLE_EQ(m.entries[0].geometry.bond_length, 0.945);
}

TEST(Manifest, AngleScanIsOrdered) {
  const auto m = aqv::load_manifest(kData / "angle_scan.manifest");
  ASSERT_EQ(m.entries.size(), 21u);
  for (std::size_t i = 0; i < 21; ++i) {
    EXPECT_DOUBLE_EQ(m.entries[i].geometry.bond_angle, 85.0 + 2.0 * i);
    EXPECT_DOUBLE_EQ(m.entries[i].geometry.bond_length, 0.945);
  }
}

TEST(Manifest, Errors) {
  EXPECT_EQ(kind_of([] { aqv::parse_manifest("# nothing\n\n", kData); }),
            ErrorKind::kValidation);
  try {
    aqv::parse_manifest("100 1.0 fcidump/missing.fcidump\n", kData);
    FAIL();
  } catch (const aqv::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
    EXPECT_NE(std::string(e.what()).find("missing.fcidump"), std::string::npos);
  }
  const std::string f = "fcidump/h2o_a104.5_r0.945.fcidump";
  const std::string g = "fcidump/h2o_a101.0_r0.945.fcidump";
  EXPECT_EQ(kind_of([&] {
              aqv::parse_manifest("104.5 0.945 " + f + "\n104.5 0.945 " + g + "\n",
                                  kData);
            }),
            ErrorKind::kValidation);
  EXPECT_EQ(kind_of([&] {
              aqv::parse_manifest("104.5 0.945 " + f + "\n105 0.945 " + f + "\n",
                                  kData);
            }),
            ErrorKind::kValidation);
}

}  // namespace
