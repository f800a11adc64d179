// Copyright 2026 The vqebench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/fci.hpp"
#include "vqebench/hamiltonian.hpp"
#include "vqebench/synthetic.hpp"

namespace {

using namespace vqebench;
namespace fs = std::filesystem;

const fs::path kData = VQEBENCH_DATA_DIR;

struct ReferenceRow {
  std::string label, file;
  double casci = 0.0, rhf = 0.0;
};

std::vector<ReferenceRow> read_reference(const fs::path& dir) {
  std::ifstream in(dir / "reference.csv");
  std::vector<ReferenceRow> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    ReferenceRow r;
    std::string casci, rhf;
    std::getline(ss, r.label, ',');
    std::getline(ss, r.file, ',');
    std::getline(ss, casci, ',');
    std::getline(ss, rhf, ',');
    r.casci = std::stod(casci);
    r.rhf = std::stod(rhf);
    rows.push_back(r);
  }
  return rows;
}

TEST(ParseFcidump, ConstantOnlyFile) {
  const auto m = parse_fcidump_text("&FCI NORB=2, NELEC=2, MS2=0,\n&END\n0.5 0 0 0 0\n");
  EXPECT_EQ(m.n_spatial, 2u);
  EXPECT_EQ(m.n_electrons, 2u);
  EXPECT_EQ(m.core_energy, 0.5);
  EXPECT_EQ(m.h1.cwiseAbs().maxCoeff(), 0.0);
  for (double v : m.h2) EXPECT_EQ(v, 0.0);
}

TEST(ParseFcidump, OneElectronSymmetryFill) {
  const auto m = parse_fcidump_text("&FCI NORB=2,NELEC=2,MS2=0 /\n0.25 1 2 0 0\n");
  EXPECT_EQ(m.h1(0, 1), 0.25);
  EXPECT_EQ(m.h1(1, 0), 0.25);
}

TEST(ParseFcidump, TwoElectronEightfoldFill) {
  const auto m = parse_fcidump_text("&FCI NORB=2,NELEC=2 &END\n0.125 2 1 1 1\n");
  for (auto [i, j, k, l] : std::vector<std::array<int, 4>>{
           {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})
    EXPECT_EQ(m.eri(i, j, k, l), 0.125);
  EXPECT_EQ(m.eri(1, 1, 0, 0), 0.0);
}

TEST(ParseFcidump, MultiLineHeaderOrbsymAndFortranExponents) {
  const std::string text =
      " &FCI NORB=  2,NELEC=2,MS2=0,\n"
      "  ORBSYM=1,1,\n"
      "  ISYM=1,\n"
      " &END\n"
      "  6.0D-01   1   1   1   1\n"
      " -1.25E+00  1   1   0   0\n"
      "  7.0d-1    0   0   0   0\n";
  const auto m = parse_fcidump_text(text);
  EXPECT_DOUBLE_EQ(m.eri(0, 0, 0, 0), 0.6);
  EXPECT_DOUBLE_EQ(m.h1(0, 0), -1.25);
  EXPECT_DOUBLE_EQ(m.core_energy, 0.7);
}

TEST(ParseFcidump, MalformedHeaderReportsLine) {
  try {
    parse_fcidump_text("NORB=2\n0.5 0 0 0 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(parse_fcidump_text("&FCI NORB=2, NELEC=2\n0.5 0 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_fcidump_text("&FCI NORB=x, NELEC=2 /\n"), ParseError);
  EXPECT_THROW(parse_fcidump_text("&FCI NELEC=2 /\n"), ParseError);
}

TEST(ParseFcidump, IndexOutOfRange) {
  try {
    parse_fcidump_text("&FCI NORB=2,NELEC=2 /\n0.5 0 0 0 0\n0.1 3 1 0 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseFcidump, MalformedRecord) {
  EXPECT_THROW(parse_fcidump_text("&FCI NORB=2,NELEC=2 /\n0.5 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_fcidump_text("&FCI NORB=2,NELEC=2 /\nabc 0 0 0 0\n"), ParseError);
}

TEST(ParseFcidump, InconsistentDuplicate) {
  EXPECT_THROW(parse_fcidump_text("&FCI NORB=2,NELEC=2 /\n0.25 1 2 0 0\n0.3 2 1 0 0\n"), IntegrityError);
  EXPECT_NO_THROW(parse_fcidump_text("&FCI NORB=2,NELEC=2 /\n0.25 1 2 0 0\n0.25 2 1 0 0\n"));
}

TEST(ParseFcidump, ElectronCountOutOfRange) {
  EXPECT_THROW(parse_fcidump_text("&FCI NORB=1,NELEC=3 /\n"), InputError);
  EXPECT_THROW(parse_fcidump_text("&FCI NORB=1,NELEC=0 /\n"), InputError);
}

TEST(ReadFcidump, MissingFileIsIoError) {
  EXPECT_THROW(read_fcidump(kData / "does_not_exist.fcidump"), IoError);
}

TEST(ReadFcidump, H2AtEquilibriumGroundEnergy) {
  const auto m = read_fcidump(kData / "h2_eq" / "h2_eq_0.735.fcidump");
  EXPECT_EQ(m.n_spatial, 2u);
  EXPECT_EQ(m.n_electrons, 2u);
  EXPECT_NEAR(solve_fci(m).energy, -1.137, 5e-4);
}

// reference.csv holds CASCI and RHF energies computed by PySCF on the same
// active space that produced each dump.
class ExternalReference : public ::testing::TestWithParam<std::string> {};

TEST_P(ExternalReference, FciAndMeanFieldMatchExternalPackage) {
  const fs::path dir = kData / GetParam();
  const auto rows = read_reference(dir);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    const auto m = read_fcidump(dir / r.file, r.label);
    EXPECT_NEAR(solve_fci(m).energy, r.casci, 1e-9) << r.file;
    const auto q = qubit_hamiltonian(m);
    const auto hf = hartree_fock_reference(m.n_spin_orbitals(), m.n_electrons);
    EXPECT_NEAR(expectation(hf, q.op) + q.core_energy, r.rhf, 1e-9) << r.file;
  }
}

INSTANTIATE_TEST_SUITE_P(Molecules, ExternalReference, ::testing::Values("h2", "nah", "kh", "h2_eq"));

TEST(FcidumpRoundTrip, BitIdenticalTensors) {
  std::mt19937_64 rng(59);
  std::vector<MolecularHamiltonian> cases{read_fcidump(kData / "nah" / "nah_1.80.fcidump")};
  for (std::size_t n : {1, 2, 3, 4}) cases.push_back(random_hamiltonian(n, 2, rng));
  for (const auto& m : cases) {
    const std::string text = write_fcidump(m);
    const auto back = parse_fcidump_text(text);
    EXPECT_EQ(back.n_spatial, m.n_spatial);
    EXPECT_EQ(back.n_electrons, m.n_electrons);
    EXPECT_EQ(back.core_energy, m.core_energy);
    EXPECT_TRUE(back.h1 == m.h1);
    EXPECT_EQ(back.h2, m.h2);
    EXPECT_EQ(write_fcidump(back), text);
  }
}

TEST(FermionHamiltonian, ZeroTensorsPassCoreThrough) {
  auto m = MolecularHamiltonian::zeros(2, 2);
  m.core_energy = 1.25;
  const auto f = to_fermion_hamiltonian(m);
  EXPECT_TRUE(f.op.empty());
  EXPECT_EQ(f.core_energy, 1.25);
}

TEST(FermionHamiltonian, SingleOrbitalSpinExpansion) {
  auto m = MolecularHamiltonian::zeros(1, 2);
  m.h1(0, 0) = -0.75;
  const auto f = to_fermion_hamiltonian(m);
  ASSERT_EQ(f.op.products().size(), 2u);
  for (std::size_t s = 0; s < 2; ++s) {
    EXPECT_EQ(f.op.products()[s].factors, (std::vector<LadderOp>{create(s), annihilate(s)}));
    EXPECT_EQ(f.op.products()[s].coefficient, cplx(-0.75));
  }
}

TEST(QubitHamiltonian, MatchesLadderMatrixOracle) {
  std::mt19937_64 rng(61);
  for (std::size_t n : {1, 2, 3}) {
    const auto m = random_hamiltonian(n, 2, rng);
    const auto q = qubit_hamiltonian(m);
    EXPECT_LT((to_matrix(q.op) - oracle::hamiltonian_matrix(m)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(q.core_energy, m.core_energy);
  }
}

TEST(QubitHamiltonian, ReferenceEnergyEqualsClosedFormMeanField) {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + k % 3;
    const std::size_t ne = 2 * (1 + k % n);
    const auto m = random_hamiltonian(n, std::min(ne, 2 * n), rng);
    const auto q = qubit_hamiltonian(m);
    const auto hf = hartree_fock_reference(m.n_spin_orbitals(), m.n_electrons);
    EXPECT_NEAR(expectation(hf, q.op) + q.core_energy, oracle::hartree_fock_energy(m), 1e-12);
  }
}

TEST(QubitHamiltonianProperty, HermitianAndNumberConserving) {
  std::mt19937_64 rng(71);
  for (std::size_t n : {1, 2, 3, 4}) {
    const auto q = qubit_hamiltonian(random_hamiltonian(n, 2, rng));
    EXPECT_TRUE(q.op.is_hermitian());
    EXPECT_TRUE(commutator(q.op, number_operator(2 * n)).empty());
  }
}

TEST(MolecularHamiltonian, ValidateRejectsBrokenSymmetry) {
  auto m = MolecularHamiltonian::zeros(2, 2);
  m.h1(0, 1) = 0.1;
  EXPECT_THROW(m.validate(), IntegrityError);
  auto e = MolecularHamiltonian::zeros(2, 2);
  e.h2[e.eri_index(0, 1, 0, 0)] = 0.1;
  EXPECT_THROW(e.validate(), IntegrityError);
}

}  // namespace
