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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vqebench/circuit.hpp"
#include "vqebench/hamiltonian.hpp"
#include "vqebench/optimize.hpp"
#include "vqebench/pool.hpp"
#include "vqebench/statevector.hpp"

namespace vqebench {

struct AdaptConfig {
  /// ADAPT stops once the L2 norm of the pool gradient is at or below this.
  double grad_norm_threshold = 1e-2;
  /// Cap on the number of operators ADAPT may append.
  std::size_t max_iterations = 50;
  OptimizerKind optimizer = OptimizerKind::Lbfgs;
  double tol_rel_energy = kDefaultTolRelEnergy;
  double fd_step = kDefaultFdStep;
  std::size_t max_evaluations = 100000;
  /// Start each re-optimisation from the previous optimum (new angle at 0)
  /// instead of all zeros. Off by default.
  bool warm_start = false;

  void validate() const;
};

/// Symbolic measurement cost: one unit per non-identity Pauli term of every
/// operator whose expectation value is evaluated.
struct MeasurementLedger {
  std::size_t energy_evaluations = 0;
  std::size_t commutator_evaluations = 0;
  std::size_t pauli_term_measurements = 0;

  friend bool operator==(const MeasurementLedger&, const MeasurementLedger&) = default;
};

struct AdaptIteration {
  /// Pool id appended in this iteration; nullopt for the final screening
  /// that met the threshold (and for the single VQE record).
  std::optional<std::size_t> selected_pool_id;
  double grad_norm = 0.0;
  std::vector<double> grad_vector;
  double energy = 0.0;
  std::vector<double> theta;
  std::size_t measurement_count_cumulative = 0;
  bool optimizer_converged = true;
  /// The all-zeros optimisation ended above the previous iterate and was
  /// rerun from the previous angles with the new angle at 0.
  bool warm_restarted = false;
};

struct RunResult {
  std::string method;
  OptimizerKind optimizer = OptimizerKind::Lbfgs;
  Ansatz ansatz;
  /// Includes the core energy.
  double energy = 0.0;
  std::vector<AdaptIteration> trace;
  MeasurementLedger ledger;
  CircuitMetrics resources;
  bool converged = false;
  std::optional<double> final_grad_norm;
  StateVector state;
};

/// Everything a VQE/ADAPT run needs for one Hamiltonian: the qubit operator,
/// the singlet UCCSD pool, the reference state and the cached screening
/// commutators [H, tau_k].
class VqeProblem {
 public:
  explicit VqeProblem(const MolecularHamiltonian& ham);

  const QubitHamiltonian& hamiltonian() const noexcept { return ham_; }
  std::shared_ptr<const OperatorPool> pool() const noexcept { return pool_; }
  const StateVector& reference() const noexcept { return reference_; }
  std::size_t n_qubits() const noexcept { return reference_.n_qubits(); }
  const std::vector<PauliSum>& commutators() const;

  /// core + <psi(ansatz)|H|psi(ansatz)>, charged to the ledger.
  double energy(const Ansatz& ansatz, MeasurementLedger& ledger) const;
  double energy(const StateVector& psi, MeasurementLedger& ledger) const;

 private:
  QubitHamiltonian ham_;
  std::shared_ptr<const OperatorPool> pool_;
  StateVector reference_;
  mutable std::vector<PauliSum> commutators_;
};

/// <psi|[H, tau_k]|psi> for every pool element.
std::vector<double> screen_pool(const StateVector& psi, const PauliSum& h_p,
                                const OperatorPool& pool, MeasurementLedger& ledger);
/// Same, with precomputed commutators.
std::vector<double> screen_commutators(const StateVector& psi,
                                       std::span<const PauliSum> commutators,
                                       MeasurementLedger& ledger);

/// Index of the largest |gradient|; ties within 1e-12 go to the lowest index.
std::size_t select_operator(std::span<const double> grads, const OperatorPool& pool);

RunResult run_adapt(const MolecularHamiltonian& ham, const AdaptConfig& cfg);
RunResult run_adapt(const VqeProblem& problem, const AdaptConfig& cfg);

/// Fixed full UCCSD ansatz optimised once from theta = 0.
RunResult run_vqe(const MolecularHamiltonian& ham, const AdaptConfig& cfg);
RunResult run_vqe(const VqeProblem& problem, const AdaptConfig& cfg);

/// Runs the configured optimiser on `ansatz` (angles taken as the start
/// point) and charges every energy evaluation to the ledger.
OptimizationResult optimize_ansatz(const VqeProblem& problem, Ansatz& ansatz,
                                   const AdaptConfig& cfg, MeasurementLedger& ledger);

}  // namespace vqebench
