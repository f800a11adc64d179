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

#include "vqebench/adapt.hpp"

#include <algorithm>
#include <cmath>

#include "vqebench/errors.hpp"

namespace vqebench {
namespace {

constexpr double kTieTolerance = 1e-12;

double l2_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

}  // namespace

void AdaptConfig::validate() const {
  if (!(grad_norm_threshold > 0.0)) throw InputError("grad_norm_threshold must be positive");
  if (!(tol_rel_energy > 0.0)) throw InputError("tol_rel_energy must be positive");
  if (!(fd_step > 0.0)) throw InputError("fd_step must be positive");
  if (max_iterations < 1) throw InputError("max_iterations must be >= 1");
}

VqeProblem::VqeProblem(const MolecularHamiltonian& ham)
    : ham_(qubit_hamiltonian(ham)),
      pool_(std::make_shared<const OperatorPool>(build_uccsd_pool(ham.n_spatial, ham.n_electrons))),
      reference_(hartree_fock_reference(ham.n_spin_orbitals(), ham.n_electrons)) {}

const std::vector<PauliSum>& VqeProblem::commutators() const {
  if (commutators_.size() != pool_->size()) {
    commutators_.clear();
    for (const auto& op : pool_->operators()) {
      commutators_.push_back(commutator(ham_.op, op.qubit_form));
    }
  }
  return commutators_;
}

double VqeProblem::energy(const StateVector& psi, MeasurementLedger& ledger) const {
  ++ledger.energy_evaluations;
  ledger.pauli_term_measurements += ham_.op.non_identity_count();
  return ham_.core_energy + expectation(psi, ham_.op);
}

double VqeProblem::energy(const Ansatz& ansatz, MeasurementLedger& ledger) const {
  return energy(prepare_state(ansatz, reference_), ledger);
}

std::vector<double> screen_commutators(const StateVector& psi,
                                       std::span<const PauliSum> commutators,
                                       MeasurementLedger& ledger) {
  std::vector<double> grads;
  grads.reserve(commutators.size());
  for (const auto& c : commutators) {
    ++ledger.commutator_evaluations;
    ledger.pauli_term_measurements += c.non_identity_count();
    grads.push_back(expectation(psi, c));
  }
  return grads;
}

std::vector<double> screen_pool(const StateVector& psi, const PauliSum& h_p,
                                const OperatorPool& pool, MeasurementLedger& ledger) {
  if (pool.empty()) throw ContractError("screen_pool: empty pool");
  std::vector<PauliSum> comms;
  comms.reserve(pool.size());
  for (const auto& op : pool.operators()) comms.push_back(commutator(h_p, op.qubit_form));
  return screen_commutators(psi, comms, ledger);
}

std::size_t select_operator(std::span<const double> grads, const OperatorPool& pool) {
  if (pool.empty()) throw ContractError("select_operator: empty pool");
  if (grads.size() != pool.size()) throw DimensionError("select_operator: gradient length mismatch");
  std::size_t best = 0;
  for (std::size_t k = 1; k < grads.size(); ++k) {
    if (std::abs(grads[k]) > std::abs(grads[best]) + kTieTolerance) best = k;
  }
  return best;
}

OptimizationResult optimize_ansatz(const VqeProblem& problem, Ansatz& ansatz,
                                   const AdaptConfig& cfg, MeasurementLedger& ledger) {
  Ansatz work = ansatz;
  Objective obj(ansatz.size(), [&](std::span<const double> theta) {
    for (std::size_t k = 0; k < theta.size(); ++k) work.elements[k].theta = theta[k];
    return problem.energy(work, ledger);
  });
  OptimizationResult res;
  if (cfg.optimizer == OptimizerKind::NelderMead) {
    NelderMeadOptions o;
    o.tol_rel_energy = cfg.tol_rel_energy;
    o.max_evaluations = cfg.max_evaluations;
    res = minimize_nelder_mead(obj, ansatz.thetas(), o);
  } else {
    LbfgsOptions o;
    o.tol_rel_energy = cfg.tol_rel_energy;
    o.fd_step = cfg.fd_step;
    o.max_evaluations = cfg.max_evaluations;
    res = minimize_lbfgs(obj, ansatz.thetas(), o);
  }
  ansatz.set_thetas(res.theta_opt);
  return res;
}

RunResult run_adapt(const MolecularHamiltonian& ham, const AdaptConfig& cfg) {
  return run_adapt(VqeProblem(ham), cfg);
}

RunResult run_adapt(const VqeProblem& problem, const AdaptConfig& cfg) {
  cfg.validate();
  RunResult out;
  out.method = "adapt";
  out.optimizer = cfg.optimizer;
  out.ansatz.pool = problem.pool();
  out.state = problem.reference();
  out.energy = problem.energy(out.state, out.ledger);

  if (problem.pool()->empty()) {
    out.converged = true;
    out.final_grad_norm = 0.0;
    out.resources = circuit_metrics(compile_circuit(out.ansatz));
    return out;
  }
  const auto& comms = problem.commutators();

  for (std::size_t iter = 0;; ++iter) {
    AdaptIteration rec;
    rec.grad_vector = screen_commutators(out.state, comms, out.ledger);
    rec.grad_norm = l2_norm(rec.grad_vector);
    out.final_grad_norm = rec.grad_norm;
    if (rec.grad_norm <= cfg.grad_norm_threshold || iter == cfg.max_iterations) {
      out.converged = rec.grad_norm <= cfg.grad_norm_threshold;
      rec.energy = out.energy;
      rec.theta = out.ansatz.thetas();
      rec.measurement_count_cumulative = out.ledger.pauli_term_measurements;
      out.trace.push_back(std::move(rec));
      break;
    }
    const std::size_t chosen = select_operator(rec.grad_vector, *problem.pool());
    rec.selected_pool_id = chosen;

    std::vector<double> previous = out.ansatz.thetas();
    previous.push_back(0.0);
    out.ansatz.elements.push_back({chosen, 0.0});
    if (!cfg.warm_start) {
      for (auto& e : out.ansatz.elements) e.theta = 0.0;
    }
    OptimizationResult opt = optimize_ansatz(problem, out.ansatz, cfg, out.ledger);
    if (opt.energy > out.energy) {
      // The previous optimum padded with a zero angle prepares the previous
      // state exactly; restarting there cannot end above out.energy.
      out.ansatz.set_thetas(previous);
      opt = optimize_ansatz(problem, out.ansatz, cfg, out.ledger);
      rec.warm_restarted = true;
    }
    rec.optimizer_converged = opt.converged;
    const double energy = std::min(opt.energy, out.energy);
    out.energy = energy;
    out.state = prepare_state(out.ansatz, problem.reference());
    rec.energy = out.energy;
    rec.theta = out.ansatz.thetas();
    rec.measurement_count_cumulative = out.ledger.pauli_term_measurements;
    out.trace.push_back(std::move(rec));
  }
  out.resources = circuit_metrics(compile_circuit(out.ansatz));
  return out;
}

RunResult run_vqe(const MolecularHamiltonian& ham, const AdaptConfig& cfg) {
  return run_vqe(VqeProblem(ham), cfg);
}

RunResult run_vqe(const VqeProblem& problem, const AdaptConfig& cfg) {
  cfg.validate();
  RunResult out;
  out.method = "vqe";
  out.optimizer = cfg.optimizer;
  out.ansatz.pool = problem.pool();
  out.state = problem.reference();
  if (problem.pool()->empty()) {
    out.energy = problem.energy(out.state, out.ledger);
    out.converged = true;
    out.resources = circuit_metrics(compile_circuit(out.ansatz));
    return out;
  }
  out.ansatz = full_uccsd_ansatz(problem.pool());
  const OptimizationResult opt = optimize_ansatz(problem, out.ansatz, cfg, out.ledger);
  out.energy = opt.energy;
  out.converged = opt.converged;
  out.state = prepare_state(out.ansatz, problem.reference());

  AdaptIteration rec;
  rec.energy = out.energy;
  rec.theta = out.ansatz.thetas();
  rec.optimizer_converged = opt.converged;
  rec.measurement_count_cumulative = out.ledger.pauli_term_measurements;
  out.trace.push_back(std::move(rec));
  out.resources = circuit_metrics(compile_circuit(out.ansatz));
  return out;
}

}  // namespace vqebench
