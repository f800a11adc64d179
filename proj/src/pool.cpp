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

#include "vqebench/pool.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "vqebench/errors.hpp"

namespace vqebench {
namespace {

// A spin-orbital excitation in canonical form: creators ascending, then
// annihilators descending, e.g. p^ q^ s r with p < q and r < s.
using ExcitationKey = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

// Sorts `v` into ascending order and returns the permutation sign, or 0 if an
// index repeats (the product then vanishes).
int sort_with_sign(std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    if (v[j] == v[j + 1]) return 0;
  }
  return sign;
}

class ExcitationAccumulator {
 public:
  // Adds coefficient * a^_{creators[0]} a^_{creators[1]} ... a_{annihilators[0]} ...
  // with factors in the written order.
  void add(std::vector<std::size_t> creators, std::vector<std::size_t> annihilators, double c) {
    int sign = sort_with_sign(creators);
    std::reverse(annihilators.begin(), annihilators.end());
    sign *= sort_with_sign(annihilators);
    if (sign == 0) return;
    terms_[{creators, annihilators}] += sign * c;
  }

  // T with squared coefficients summing to 1/2, so tau = T - T^ has unit norm.
  std::vector<LadderProduct> normalized_products() const {
    double sq = 0.0;
    for (const auto& [key, c] : terms_) sq += c * c;
    std::vector<LadderProduct> out;
    if (sq < 1e-24) return out;
    const double scale = 1.0 / std::sqrt(2.0 * sq);
    for (const auto& [key, c] : terms_) {
      if (std::abs(c) * scale < 1e-14) continue;
      LadderProduct p;
      for (auto q : key.first) p.factors.push_back(create(q));
      for (auto it = key.second.rbegin(); it != key.second.rend(); ++it) {
        p.factors.push_back(annihilate(*it));
      }
      p.coefficient = c * scale;
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  std::map<ExcitationKey, double> terms_;
};

std::size_t alpha(std::size_t m) { return 2 * m; }
std::size_t beta(std::size_t m) { return 2 * m + 1; }

PoolOperator make_operator(std::size_t n_qubits, const std::vector<LadderProduct>& excitations,
                           std::string description) {
  PoolOperator op;
  op.description = std::move(description);
  FermionOperator t(n_qubits);
  for (const auto& e : excitations) {
    t.add(e);
    FermionOperator channel(n_qubits);
    channel.add(e);
    op.channels.push_back(jordan_wigner(anti_hermitian_pair(channel)));
  }
  op.fermionic = anti_hermitian_pair(t);
  op.qubit_form = jordan_wigner(op.fermionic);
  return op;
}

}  // namespace

std::vector<PauliRotation> PoolOperator::rotations() const {
  std::vector<PauliRotation> out;
  for (const auto& ch : channels) {
    for (const auto& [key, c] : ch.terms()) out.push_back({key, c.imag()});
  }
  return out;
}

bool PoolOperator::channels_commute() const {
  for (std::size_t a = 0; a < channels.size(); ++a) {
    for (std::size_t b = a + 1; b < channels.size(); ++b) {
      if (!commutator(channels[a], channels[b]).empty()) return false;
    }
  }
  return true;
}

void validate_pool_operator(const PoolOperator& op) {
  const std::string who = "pool operator " + std::to_string(op.id) + " (" + op.description + ")";
  if (!op.qubit_form.is_anti_hermitian()) throw ContractError(who + " is not anti-Hermitian");
  const PauliSum n_op = number_operator(op.qubit_form.n_qubits());
  if (!commutator(op.qubit_form, n_op).empty()) {
    throw ContractError(who + " does not conserve particle number");
  }
  PauliSum total(op.qubit_form.n_qubits());
  for (const auto& ch : op.channels) {
    if (!ch.is_anti_hermitian()) throw ContractError(who + ": channel is not anti-Hermitian");
    if (!ch.terms_mutually_commute()) {
      throw ContractError(who + ": channel strings do not mutually commute");
    }
    if (!commutator(ch, n_op).empty()) {
      throw ContractError(who + ": channel does not conserve particle number");
    }
    total = total + ch;
  }
  if (total.max_abs_difference(op.qubit_form) > kPruneThreshold) {
    throw ContractError(who + ": channels do not sum to the generator");
  }
}

OperatorPool::OperatorPool(std::size_t n_qubits, std::vector<PoolOperator> operators)
    : n_qubits_(n_qubits), operators_(std::move(operators)) {
  for (std::size_t k = 0; k < operators_.size(); ++k) {
    if (operators_[k].qubit_form.n_qubits() != n_qubits_) {
      throw DimensionError("pool operator register does not match pool");
    }
    operators_[k].id = k;
    rotations_.push_back(operators_[k].rotations());
  }
}

const PoolOperator& OperatorPool::operator[](std::size_t id) const {
  if (id >= operators_.size()) throw ContractError("pool id " + std::to_string(id) + " out of range");
  return operators_[id];
}

const std::vector<PauliRotation>& OperatorPool::rotations(std::size_t id) const {
  if (id >= rotations_.size()) throw ContractError("pool id " + std::to_string(id) + " out of range");
  return rotations_[id];
}

OperatorPool build_uccsd_pool(std::size_t n_spatial, std::size_t n_electrons) {
  if (n_electrons % 2 != 0) {
    throw UnsupportedReferenceError("UCCSD pool needs a closed-shell reference (even electron count)");
  }
  if (n_electrons > 2 * n_spatial) {
    throw UnsupportedReferenceError("more electrons than spin orbitals");
  }
  const std::size_t n_qubits = 2 * n_spatial;
  const std::size_t n_occ = n_electrons / 2;
  std::vector<PoolOperator> ops;

  auto add_unique = [&](PoolOperator op) {
    if (op.qubit_form.empty()) return;
    for (const auto& existing : ops) {
      if (existing.qubit_form.max_abs_difference(op.qubit_form) < kPruneThreshold ||
          existing.qubit_form.max_abs_difference(op.qubit_form.scaled(-1.0)) < kPruneThreshold) {
        return;
      }
    }
    op.id = ops.size();
    validate_pool_operator(op);
    ops.push_back(std::move(op));
  };

  for (std::size_t i = 0; i < n_occ; ++i) {
    for (std::size_t a = n_occ; a < n_spatial; ++a) {
      ExcitationAccumulator acc;
      acc.add({alpha(a)}, {alpha(i)}, 1.0);
      acc.add({beta(a)}, {beta(i)}, 1.0);
      add_unique(make_operator(n_qubits, acc.normalized_products(),
                               "single " + std::to_string(i) + "->" + std::to_string(a) +
                                   " (singlet)"));
    }
  }
  for (std::size_t i = 0; i < n_occ; ++i) {
    for (std::size_t j = i; j < n_occ; ++j) {
      for (std::size_t a = n_occ; a < n_spatial; ++a) {
        for (std::size_t b = a; b < n_spatial; ++b) {
          // E_ai E_bj = sum_{s,t} a^_{a s} a^_{b t} a_{j t} a_{i s}
          ExcitationAccumulator acc;
          for (auto s : {0, 1}) {
            for (auto t : {0, 1}) {
              acc.add({2 * a + s, 2 * b + t}, {2 * j + t, 2 * i + s}, 1.0);
            }
          }
          add_unique(make_operator(
              n_qubits, acc.normalized_products(),
              "double " + std::to_string(i) + "," + std::to_string(j) + "->" + std::to_string(a) +
                  "," + std::to_string(b) + " (singlet)"));
        }
      }
    }
  }
  return OperatorPool(n_qubits, std::move(ops));
}

std::vector<double> Ansatz::thetas() const {
  std::vector<double> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.theta);
  return out;
}

void Ansatz::set_thetas(const std::vector<double>& thetas) {
  if (thetas.size() != elements.size()) throw DimensionError("theta count does not match ansatz");
  for (std::size_t k = 0; k < thetas.size(); ++k) elements[k].theta = thetas[k];
}

Ansatz full_uccsd_ansatz(std::shared_ptr<const OperatorPool> pool) {
  if (!pool || pool->empty()) throw ContractError("full_uccsd_ansatz: empty pool");
  Ansatz a;
  a.pool = pool;
  for (std::size_t k = 0; k < pool->size(); ++k) a.elements.push_back({k, 0.0});
  return a;
}

void apply_pool_element(StateVector& s, const OperatorPool& pool, std::size_t id, double theta) {
  for (const auto& r : pool.rotations(id)) s.rotate(r.key, theta * r.weight);
}

StateVector prepare_state(const Ansatz& a, const StateVector& reference) {
  if (a.elements.empty()) return reference;
  if (!a.pool) throw ContractError("prepare_state: ansatz has no pool");
  if (a.pool->n_qubits() != reference.n_qubits()) {
    throw ContractError("prepare_state: reference register does not match pool");
  }
  StateVector s = reference;
  for (const auto& e : a.elements) apply_pool_element(s, *a.pool, e.pool_id, e.theta);
  return s;
}

GateCircuit compile_circuit(const Ansatz& a) {
  if (a.elements.empty()) return GateCircuit(a.pool ? a.pool->n_qubits() : 0);
  GateCircuit c(a.pool->n_qubits());
  for (const auto& e : a.elements) {
    for (const auto& r : a.pool->rotations(e.pool_id)) {
      c.append_pauli_rotation(r.key, e.theta * r.weight);
    }
  }
  return c;
}

}  // namespace vqebench
