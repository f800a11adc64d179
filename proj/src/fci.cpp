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

#include "vqebench/fci.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include <Eigen/Eigenvalues>

#include "vqebench/errors.hpp"

namespace vqebench {

FciSolution solve_fci(const MolecularHamiltonian& ham) {
  return solve_fci(qubit_hamiltonian(ham), ham.n_spin_orbitals());
}

FciSolution solve_fci(const QubitHamiltonian& ham, std::size_t n_qubits) {
  if (n_qubits > kFciQubitCap) {
    throw ResourceLimitError("solve_fci: " + std::to_string(n_qubits) + " qubits exceeds cap of " +
                             std::to_string(kFciQubitCap));
  }
  if (ham.op.n_qubits() != n_qubits) throw DimensionError("solve_fci: register mismatch");
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<std::size_t> basis;
  std::vector<long> position(dim, -1);
  for (std::size_t b = 0; b < dim; ++b) {
    if (static_cast<std::size_t>(std::popcount(b)) == ham.n_electrons) {
      position[b] = static_cast<long>(basis.size());
      basis.push_back(b);
    }
  }
  if (basis.empty()) throw ContractError("solve_fci: empty electron-number sector");

  const auto m = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m, m);
  for (const auto& term : ham.op.term_list()) {
    const auto& key = term.key();
    for (Eigen::Index col = 0; col < m; ++col) {
      const std::size_t b = basis[static_cast<std::size_t>(col)];
      const long row = position[b ^ key.x];
      if (row < 0) continue;
      int k = std::popcount(key.x & key.z) + 2 * (std::popcount(b & key.z) & 1);
      static const cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      h(row, col) += term.coefficient() * kIPowers[k & 3];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw ContractError("solve_fci: eigensolver failed");
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();

  FciSolution sol;
  sol.core_energy = ham.core_energy;
  sol.sector = ham.n_electrons;
  sol.energy = evals(0) + ham.core_energy;
  for (Eigen::Index k = 0; k < m; ++k) sol.sector_spectrum.push_back(evals(k) + ham.core_energy);

  auto embed = [&](Eigen::Index k) {
    std::vector<cplx> amps(dim, cplx{});
    for (Eigen::Index r = 0; r < m; ++r) amps[basis[static_cast<std::size_t>(r)]] = evecs(r, k);
    return StateVector::normalized(n_qubits, std::move(amps));
  };
  sol.ground_state = embed(0);
  sol.ground_space.push_back(sol.ground_state);
  for (Eigen::Index k = 1; k < m && evals(k) - evals(0) < kDegeneracyTol; ++k) {
    sol.degeneracy_flag = true;
    sol.ground_space.push_back(embed(k));
  }
  return sol;
}

FidelityReport infidelity_vs_fci(const StateVector& prepared, const FciSolution& sol) {
  if (prepared.n_qubits() != sol.ground_state.n_qubits()) {
    throw ContractError("infidelity_vs_fci: register mismatch");
  }
  FidelityReport r{infidelity(prepared, sol.ground_state), sol.degeneracy_flag};
  for (const auto& v : sol.ground_space) r.infidelity = std::min(r.infidelity, infidelity(prepared, v));
  return r;
}

}  // namespace vqebench
