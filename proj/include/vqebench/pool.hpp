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
#include <string>
#include <vector>

#include "vqebench/circuit.hpp"
#include "vqebench/fermion.hpp"
#include "vqebench/statevector.hpp"

namespace vqebench {

/// exp(i * weight * theta * P) for the unit string P.
struct PauliRotation {
  PauliKey key;
  double weight = 0.0;
};

/// One anti-Hermitian pool generator tau = T - T^dagger.
///
/// A singlet-adapted excitation is a sum of spin-orbital excitations
/// ("channels") sharing one amplitude. Every channel's Jordan-Wigner strings
/// mutually commute, so exp(theta * tau_c) factorises exactly; the element
/// is applied channel by channel in a fixed order.
struct PoolOperator {
  std::size_t id = 0;
  FermionOperator fermionic;
  PauliSum qubit_form;
  std::vector<PauliSum> channels;
  std::string description;

  /// Rotations realising the element, channel by channel, each channel in
  /// canonical term order.
  std::vector<PauliRotation> rotations() const;
  /// True when the channels commute, i.e. the element equals exp(theta*tau).
  bool channels_commute() const;
};

class OperatorPool {
 public:
  OperatorPool() = default;
  OperatorPool(std::size_t n_qubits, std::vector<PoolOperator> operators);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return operators_.size(); }
  bool empty() const noexcept { return operators_.empty(); }
  const PoolOperator& operator[](std::size_t id) const;
  const std::vector<PoolOperator>& operators() const noexcept { return operators_; }
  const std::vector<PauliRotation>& rotations(std::size_t id) const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<PoolOperator> operators_;
  std::vector<std::vector<PauliRotation>> rotations_;
};

/// Spin-singlet-adapted UCCSD generators for a closed-shell reference:
/// singles E_ai = sum_s a_{a s}^ a_{i s}, then doubles E_ai E_bj over spatial
/// quadruples i<=j occupied, a<=b virtual. Each generator is normalised so
/// the squared coefficients of tau sum to one. Throws
/// UnsupportedReferenceError for odd electron counts.
OperatorPool build_uccsd_pool(std::size_t n_spatial, std::size_t n_electrons);

/// Re-checks the pool invariants (anti-Hermitian, commuting channel strings,
/// number conservation); throws ContractError on the first violation.
void validate_pool_operator(const PoolOperator& op);

struct AnsatzElement {
  std::size_t pool_id = 0;
  double theta = 0.0;

  friend bool operator==(const AnsatzElement&, const AnsatzElement&) = default;
};

/// Ordered product of pool exponentials; element 0 acts first.
struct Ansatz {
  std::shared_ptr<const OperatorPool> pool;
  std::vector<AnsatzElement> elements;

  std::size_t size() const noexcept { return elements.size(); }
  std::vector<double> thetas() const;
  void set_thetas(const std::vector<double>& thetas);
};

/// Every pool operator once, in pool order, at theta = 0.
Ansatz full_uccsd_ansatz(std::shared_ptr<const OperatorPool> pool);

/// In place: applies pool element `id` at angle theta.
void apply_pool_element(StateVector& s, const OperatorPool& pool, std::size_t id, double theta);

StateVector prepare_state(const Ansatz& a, const StateVector& reference);

/// Gate-level circuit of the ansatz, following the element rotation order.
/// Zero angles still emit gates.
GateCircuit compile_circuit(const Ansatz& a);

}  // namespace vqebench
