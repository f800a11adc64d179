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

#include "vqebench/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "vqebench/adapt.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/fci.hpp"
#include "vqebench/fermion.hpp"
#include "vqebench/synthetic.hpp"

namespace vqebench {
namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double max_state_difference(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

PauliTerm random_term(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  return PauliTerm(n, PauliKey{mask(rng), mask(rng)}, cplx(c(rng), c(rng)));
}

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-0.8, 0.8);
  std::vector<SelftestCheck> checks;

  // Each check returns an empty string on success, else a failure detail.
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    SelftestCheck c{name, false, {}};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    checks.push_back(std::move(c));
  };

  check("pauli products agree with matrix products", [&]() -> std::string {
    constexpr std::size_t n = 3;
    for (int trial = 0; trial < 100; ++trial) {
      const PauliTerm a = random_term(n, rng), b = random_term(n, rng);
      const Eigen::MatrixXcd ma = to_matrix(a), mb = to_matrix(b);
      if ((to_matrix(multiply(a, b)) - ma * mb).cwiseAbs().maxCoeff() > 1e-12)
        return "product mismatch for " + a.to_string() + " * " + b.to_string();
      const bool commute = (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12;
      if (commute != a.key().commutes_with(b.key()))
        return "commutation mismatch for " + a.label() + ", " + b.label();
    }
    return {};
  });

  check("jordan-wigner anticommutation relations, n <= 6", [&]() -> std::string {
    for (std::size_t n = 1; n <= 6; ++n)
      if (!verify_car(n)) return "fails at n = " + std::to_string(n);
    return {};
  });

  check("qubit hamiltonian is hermitian and conserves particle number", [&]() -> std::string {
    for (std::size_t n_spatial : {2, 3}) {
      const auto h = qubit_hamiltonian(random_hamiltonian(n_spatial, 2, rng));
      if (!h.op.is_hermitian()) return "not hermitian";
      if (!commutator(h.op, number_operator(2 * n_spatial)).empty()) return "[H, N] != 0";
      if (!commutator(h.op, sz_operator(2 * n_spatial)).empty()) return "[H, Sz] != 0";
    }
    return {};
  });

  check("uccsd pool for two orbitals and two electrons has two operators", [&]() -> std::string {
    const auto pool = build_uccsd_pool(2, 2);
    if (pool.size() != 2) return "size " + std::to_string(pool.size());
    for (const auto& op : pool.operators()) validate_pool_operator(op);
    return {};
  });

  check("compiled circuit reproduces direct ansatz application", [&]() -> std::string {
    for (std::size_t n_spatial : {2, 3}) {
      auto pool = std::make_shared<const OperatorPool>(build_uccsd_pool(n_spatial, 2));
      Ansatz a = full_uccsd_ansatz(pool);
      for (auto& e : a.elements) e.theta = angle(rng);
      const StateVector ref = hartree_fock_reference(2 * n_spatial, 2);
      const double diff = max_state_difference(simulate(compile_circuit(a), ref), prepare_state(a, ref));
      if (diff > 1e-10) return "difference " + sci(diff);
    }
    return {};
  });

  check("fci eigenpair residual and particle number", [&]() -> std::string {
    const auto m = random_hamiltonian(3, 2, rng);
    const auto h = qubit_hamiltonian(m);
    const auto sol = solve_fci(m);
    const double lambda = sol.energy - sol.core_energy;
    double residual = 0.0;
    const StateVector& v = sol.ground_state;
    std::vector<cplx> hv(v.dimension(), 0.0);
    for (const auto& t : h.op.term_list()) {
      const auto pv = apply_term(v, t);
      for (std::size_t i = 0; i < hv.size(); ++i) hv[i] += pv[i];
    }
    for (std::size_t i = 0; i < hv.size(); ++i) residual += std::norm(hv[i] - lambda * v[i]);
    if (std::sqrt(residual) > 1e-8) return "residual " + sci(std::sqrt(residual));
    const double n = expectation(v, number_operator(6));
    if (std::abs(n - 2.0) > 1e-10) return "<N> = " + sci(n);
    return {};
  });

  check("adapt trace invariants and variational floor", [&]() -> std::string {
    for (int trial = 0; trial < 3; ++trial) {
      const auto m = random_hamiltonian(2, 2, rng);
      const auto fci = solve_fci(m);
      const VqeProblem problem(m);
      for (auto kind : {OptimizerKind::NelderMead, OptimizerKind::Lbfgs}) {
        AdaptConfig cfg;
        cfg.optimizer = kind;
        const RunResult r = run_adapt(problem, cfg);
        double previous = r.trace.empty() ? r.energy : r.trace.front().energy;
        std::size_t measured = 0;
        for (const auto& rec : r.trace) {
          double norm = 0.0;
          for (double g : rec.grad_vector) norm += g * g;
          if (std::abs(std::sqrt(norm) - rec.grad_norm) > 1e-12) return "grad_norm is not the L2 norm";
          if (rec.energy > previous + 1e-10) return "energy increased";
          if (rec.measurement_count_cumulative < measured) return "ledger decreased";
          previous = rec.energy;
          measured = rec.measurement_count_cumulative;
        }
        if (measured != r.ledger.pauli_term_measurements) return "ledger total mismatch";
        if (r.converged && *r.final_grad_norm > cfg.grad_norm_threshold) return "converged above threshold";
        if (r.energy < fci.energy - 1e-9) return "energy below fci by " + sci(fci.energy - r.energy);
        const RunResult v = run_vqe(problem, cfg);
        if (v.energy < fci.energy - 1e-9) return "vqe energy below fci";
      }
    }
    return {};
  });

  check("pool gradient equals finite difference of the newest angle", [&]() -> std::string {
    for (int trial = 0; trial < 20; ++trial) {
      const VqeProblem problem(random_hamiltonian(2, 2, rng));
      const auto& pool = *problem.pool();
      Ansatz a;
      a.pool = problem.pool();
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (int k = 0; k < 2; ++k) a.elements.push_back({pick(rng), angle(rng)});
      MeasurementLedger ledger;
      const auto grads = screen_commutators(prepare_state(a, problem.reference()), problem.commutators(), ledger);
      const std::size_t id = pick(rng);
      a.elements.push_back({id, 0.0});
      Objective obj(a.size(), [&](std::span<const double> theta) {
        Ansatz w = a;
        w.set_thetas({theta.begin(), theta.end()});
        return problem.energy(w, ledger);
      });
      const auto fd = central_difference_gradient(obj, a.thetas(), kDefaultFdStep);
      if (std::abs(fd.back() - grads[id]) > 1e-6) return "mismatch " + sci(std::abs(fd.back() - grads[id]));
    }
    return {};
  });

  return checks;
}

}  // namespace vqebench
