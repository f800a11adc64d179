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
#include <functional>
#include <string>
#include <vector>

#include "vqebench/pauli.hpp"

namespace vqebench {

/// One creation (dagger) or annihilation operator on a spin orbital.
struct LadderOp {
  std::size_t index = 0;
  bool dagger = false;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

inline LadderOp create(std::size_t p) { return {p, true}; }
inline LadderOp annihilate(std::size_t p) { return {p, false}; }

/// coefficient * factors[0] factors[1] ... in the given order. Factors are
/// never reordered implicitly.
struct LadderProduct {
  std::vector<LadderOp> factors;
  cplx coefficient{1.0, 0.0};

  LadderProduct adjoint() const;
  /// All creation operators precede all annihilation operators.
  bool is_excitation_ordered() const noexcept;
  std::string to_string() const;
};

/// A linear combination of ladder products over n spin orbitals.
///
/// Spin orbitals are interleaved: spatial orbital m owns spin orbitals 2m
/// (alpha) and 2m+1 (beta).
class FermionOperator {
 public:
  FermionOperator() = default;
  explicit FermionOperator(std::size_t n_spin_orbitals);
  FermionOperator(std::size_t n_spin_orbitals, std::vector<LadderProduct> products);

  std::size_t n_spin_orbitals() const noexcept { return n_spin_orbitals_; }
  const std::vector<LadderProduct>& products() const noexcept { return products_; }
  bool empty() const noexcept { return products_.empty(); }

  void add(LadderProduct product);
  void add(std::vector<LadderOp> factors, cplx coefficient);

  FermionOperator adjoint() const;
  FermionOperator scaled(cplx factor) const;
  std::string to_string() const;

 private:
  std::size_t n_spin_orbitals_ = 0;
  std::vector<LadderProduct> products_;
};

FermionOperator operator+(const FermionOperator& a, const FermionOperator& b);
FermionOperator operator-(const FermionOperator& a, const FermionOperator& b);

/// t - t^dagger. Requires every product of t to be excitation ordered.
FermionOperator anti_hermitian_pair(const FermionOperator& t);

/// Qubit image of a single ladder operator on an n-qubit register.
using LadderMap =
    std::function<PauliSum(std::size_t index, bool dagger, std::size_t n_qubits)>;

/// a_p^dagger -> Z_{j<p} (X_p - iY_p)/2 and a_p -> Z_{j<p} (X_p + iY_p)/2.
PauliSum jordan_wigner_ladder(std::size_t index, bool dagger, std::size_t n_qubits);

PauliSum jordan_wigner(const FermionOperator& f);
PauliSum map_to_qubits(const FermionOperator& f, const LadderMap& map);

/// Checks {a_p, a_q^dagger} = delta_pq and {a_p, a_q} = 0 for all p, q < n
/// on dense matrices of the mapped operators.
bool verify_car(std::size_t n, const LadderMap& map = jordan_wigner_ladder);

/// Total number operator sum_p n_p as a PauliSum.
PauliSum number_operator(std::size_t n_spin_orbitals);
/// S_z = sum_m (n_{m,alpha} - n_{m,beta}) / 2 under interleaved ordering.
PauliSum sz_operator(std::size_t n_spin_orbitals);

}  // namespace vqebench
