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
#include <vector>

#include "vqebench/hamiltonian.hpp"
#include "vqebench/statevector.hpp"

namespace vqebench {

/// Largest register the exact solver accepts.
inline constexpr std::size_t kFciQubitCap = 12;
/// Two lowest sector eigenvalues closer than this count as degenerate.
inline constexpr double kDegeneracyTol = 1e-9;

/// Ground state of the qubit Hamiltonian within the fixed electron-number
/// sector. `energy` includes the core energy.
struct FciSolution {
  double energy = 0.0;
  double core_energy = 0.0;
  StateVector ground_state;
  std::size_t sector = 0;
  bool degeneracy_flag = false;
  /// Orthonormal basis of the (near-)degenerate ground space; its first
  /// vector is ground_state.
  std::vector<StateVector> ground_space;
  /// Sector eigenvalues in ascending order, core included.
  std::vector<double> sector_spectrum;
};

/// Dense diagonalisation of the Jordan-Wigner Hamiltonian restricted to
/// basis states with popcount == n_electrons.
FciSolution solve_fci(const MolecularHamiltonian& ham);
FciSolution solve_fci(const QubitHamiltonian& ham, std::size_t n_qubits);

struct FidelityReport {
  double infidelity = 0.0;
  bool degenerate = false;
};

/// Infidelity against the FCI ground state; for a degenerate ground space the
/// minimum over its orthonormal basis is reported and flagged.
FidelityReport infidelity_vs_fci(const StateVector& prepared, const FciSolution& sol);

}  // namespace vqebench
