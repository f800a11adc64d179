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

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqebench/fermion.hpp"
#include "vqebench/pauli.hpp"

namespace vqebench {

/// Spatial-orbital electronic integrals of a (possibly active-space)
/// molecular Hamiltonian. Energies are in Hartree.
struct MolecularHamiltonian {
  std::size_t n_spatial = 0;
  std::size_t n_electrons = 0;
  int ms2 = 0;
  double core_energy = 0.0;
  Eigen::MatrixXd h1;
  /// Chemist-notation (ij|kl), flattened row-major over n_spatial^4.
  std::vector<double> h2;
  std::string label;

  static MolecularHamiltonian zeros(std::size_t n_spatial, std::size_t n_electrons);

  std::size_t n_spin_orbitals() const noexcept { return 2 * n_spatial; }
  std::size_t eri_index(std::size_t i, std::size_t j, std::size_t k,
                        std::size_t l) const noexcept {
    return ((i * n_spatial + j) * n_spatial + k) * n_spatial + l;
  }
  double eri(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return h2[eri_index(i, j, k, l)];
  }
  /// Sets (ij|kl) and its seven permutational partners.
  void set_eri(std::size_t i, std::size_t j, std::size_t k, std::size_t l, double v);

  /// Throws IntegrityError if symmetry or electron-count invariants fail.
  void validate() const;
};

/// Reads FCIDUMP text: a `&FCI NORB=.., NELEC=.., MS2=..` namelist closed by
/// `&END` or `/`, then `value i j k l` records with 1-based spatial indices.
MolecularHamiltonian parse_fcidump(std::istream& in, std::string label = "");
MolecularHamiltonian parse_fcidump_text(const std::string& text, std::string label = "");
MolecularHamiltonian read_fcidump(const std::filesystem::path& path, std::string label = "");

/// Canonical FCIDUMP rendering: unique two-electron records, then one-electron
/// records, then the constant, all with round-trip precision.
std::string write_fcidump(const MolecularHamiltonian& m);

struct FermionHamiltonian {
  FermionOperator op;
  double core_energy = 0.0;
};

/// Spin-orbital Hamiltonian sum h_pq p^ q + 1/2 sum <pq|rs> p^ q^ s r with
/// <pq|rs> = (pr|qs) restricted to spin-conserving index pairs.
FermionHamiltonian to_fermion_hamiltonian(const MolecularHamiltonian& m);

struct QubitHamiltonian {
  PauliSum op;
  double core_energy = 0.0;
  std::size_t n_electrons = 0;
};

/// Jordan-Wigner image of to_fermion_hamiltonian(m).
QubitHamiltonian qubit_hamiltonian(const MolecularHamiltonian& m);

}  // namespace vqebench
