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
#include <span>
#include <vector>

#include "vqebench/pauli.hpp"

namespace vqebench {

/// Normalisation tolerance used by every state operation.
inline constexpr double kNormTolerance = 1e-10;

/// Dense statevector over 2^n computational basis states. Basis index bit q
/// is the value of qubit q (1 = occupied spin orbital).
class StateVector {
 public:
  StateVector() = default;
  /// |0...0>
  explicit StateVector(std::size_t n_qubits);

  static StateVector basis_state(std::size_t n_qubits, std::size_t index);
  /// Takes ownership of the amplitudes; they must already have unit norm.
  static StateVector from_amplitudes(std::size_t n_qubits, std::vector<cplx> amplitudes);
  /// Rescales arbitrary non-zero amplitudes to unit norm.
  static StateVector normalized(std::size_t n_qubits, std::vector<cplx> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[i]; }
  double norm() const noexcept;

  /// In place: |s> <- exp(i * angle * P)|s> for the unit-coefficient string P.
  void rotate(const PauliKey& key, double angle);

 private:
  std::size_t n_qubits_ = 0;
  std::vector<cplx> amplitudes_;
};

/// Qubits 0..n_electrons-1 occupied, the rest empty.
StateVector hartree_fock_reference(std::size_t n_qubits, std::size_t n_electrons);

/// exp(i * angle * P)|s> with P a Hermitian term of unit real coefficient
/// (the coefficient's sign is folded into the rotation).
StateVector apply_pauli_exponential(const StateVector& s, const PauliTerm& p, double angle);

/// exp(theta * tau)|s> for an anti-Hermitian tau whose strings mutually
/// commute, applied as the product of per-string exponentials in canonical
/// term order.
StateVector apply_pool_operator(const StateVector& s, const PauliSum& tau, double theta);

/// P|s> for a single term including its coefficient (not normalised).
std::vector<cplx> apply_term(const StateVector& s, const PauliTerm& p);

/// <s|P|s> for a unit-coefficient string.
cplx pauli_expectation(const StateVector& s, const PauliKey& key);

/// <s|o|s> for Hermitian o, evaluated term by term.
double expectation(const StateVector& s, const PauliSum& o);

cplx inner_product(const StateVector& bra, const StateVector& ket);

/// 1 - |<reference|s>|, insensitive to global phase.
double infidelity(const StateVector& s, const StateVector& reference);

}  // namespace vqebench
