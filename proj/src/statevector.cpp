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

#include "vqebench/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "vqebench/errors.hpp"

namespace vqebench {
namespace {

const cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Phase picked up by basis state |col> under the unit string with masks
// (x, z): P|col> = phase * |col ^ x>.
inline cplx string_phase(std::uint64_t x, std::uint64_t z, std::size_t col) {
  int k = std::popcount(x & z) + 2 * (std::popcount(static_cast<std::uint64_t>(col) & z) & 1);
  return kIPowers[k & 3];
}

void require_qubits(std::size_t n) {
  if (n >= 8 * sizeof(std::size_t) - 1) throw ResourceLimitError("statevector register too large");
}

void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw ContractError("statevector qubit counts differ");
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  require_qubits(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, cplx{});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::size_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) throw DimensionError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::size_t n_qubits, std::vector<cplx> amplitudes) {
  require_qubits(n_qubits);
  if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("amplitude count must be 2^n_qubits");
  }
  StateVector s;
  s.n_qubits_ = n_qubits;
  s.amplitudes_ = std::move(amplitudes);
  if (std::abs(s.norm() - 1.0) > kNormTolerance) {
    throw ContractError("amplitudes are not normalised");
  }
  return s;
}

StateVector StateVector::normalized(std::size_t n_qubits, std::vector<cplx> amplitudes) {
  double nrm = 0.0;
  for (const auto& a : amplitudes) nrm += std::norm(a);
  nrm = std::sqrt(nrm);
  if (nrm == 0.0) throw ContractError("cannot normalise a zero vector");
  for (auto& a : amplitudes) a /= nrm;
  return from_amplitudes(n_qubits, std::move(amplitudes));
}

double StateVector::norm() const noexcept {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::rotate(const PauliKey& key, double angle) {
  const double c = std::cos(angle);
  const cplx is{0.0, std::sin(angle)};
  const std::size_t dim = amplitudes_.size();
  if (key.x == 0) {
    // Diagonal string: each basis state just picks up e^{+-i angle}.
    const cplx plus = c + is, minus = c - is;
    for (std::size_t col = 0; col < dim; ++col) {
      amplitudes_[col] *= (std::popcount(col & key.z) & 1) ? minus : plus;
    }
    return;
  }
  const std::uint64_t top = std::uint64_t{1} << (std::bit_width(key.x) - 1);
  for (std::size_t col = 0; col < dim; ++col) {
    if (col & top) continue;
    const std::size_t partner = col ^ key.x;
    const cplx a = amplitudes_[col];
    const cplx b = amplitudes_[partner];
    amplitudes_[col] = c * a + is * string_phase(key.x, key.z, partner) * b;
    amplitudes_[partner] = c * b + is * string_phase(key.x, key.z, col) * a;
  }
}

StateVector hartree_fock_reference(std::size_t n_qubits, std::size_t n_electrons) {
  if (n_electrons > n_qubits) {
    throw ContractError("hartree_fock_reference: more electrons than qubits");
  }
  return StateVector::basis_state(n_qubits, (std::size_t{1} << n_electrons) - 1);
}

StateVector apply_pauli_exponential(const StateVector& s, const PauliTerm& p, double angle) {
  require_same(s.n_qubits(), p.n_qubits());
  const cplx c = p.coefficient();
  if (std::abs(c.imag()) > kPruneThreshold || std::abs(std::abs(c.real()) - 1.0) > kPruneThreshold) {
    throw ContractError("apply_pauli_exponential: term must have a real unit coefficient");
  }
  StateVector out = s;
  out.rotate(p.key(), angle * c.real());
  return out;
}

StateVector apply_pool_operator(const StateVector& s, const PauliSum& tau, double theta) {
  require_same(s.n_qubits(), tau.n_qubits());
  if (!tau.is_anti_hermitian()) {
    throw ContractError("apply_pool_operator: generator is not anti-Hermitian");
  }
  if (!tau.terms_mutually_commute()) {
    throw ContractError("apply_pool_operator: generator strings do not mutually commute");
  }
  StateVector out = s;
  // exp(theta * i b P) for every term i*b*P.
  for (const auto& [key, c] : tau.terms()) out.rotate(key, theta * c.imag());
  return out;
}

std::vector<cplx> apply_term(const StateVector& s, const PauliTerm& p) {
  require_same(s.n_qubits(), p.n_qubits());
  std::vector<cplx> out(s.dimension());
  const auto& key = p.key();
  for (std::size_t col = 0; col < s.dimension(); ++col) {
    out[col ^ key.x] = p.coefficient() * string_phase(key.x, key.z, col) * s[col];
  }
  return out;
}

cplx pauli_expectation(const StateVector& s, const PauliKey& key) {
  const auto amps = s.amplitudes();
  cplx acc{};
  if (key.x == 0) {
    double re = 0.0;
    for (std::size_t col = 0; col < amps.size(); ++col) {
      const double p = std::norm(amps[col]);
      re += (std::popcount(col & key.z) & 1) ? -p : p;
    }
    return re;
  }
  for (std::size_t col = 0; col < amps.size(); ++col) {
    acc += std::conj(amps[col ^ key.x]) * string_phase(key.x, key.z, col) * amps[col];
  }
  return acc;
}

double expectation(const StateVector& s, const PauliSum& o) {
  require_same(s.n_qubits(), o.n_qubits());
  if (!o.is_hermitian()) throw ContractError("expectation: observable is not Hermitian");
  cplx acc{};
  for (const auto& [key, c] : o.terms()) {
    acc += key.is_identity() ? c : c * pauli_expectation(s, key);
  }
  if (std::abs(acc.imag()) > kNormTolerance) {
    throw ContractError("expectation: imaginary part exceeds tolerance");
  }
  return acc.real();
}

cplx inner_product(const StateVector& bra, const StateVector& ket) {
  require_same(bra.n_qubits(), ket.n_qubits());
  cplx acc{};
  for (std::size_t i = 0; i < bra.dimension(); ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

double infidelity(const StateVector& s, const StateVector& reference) {
  return std::clamp(1.0 - std::abs(inner_product(reference, s)), 0.0, 1.0);
}

}  // namespace vqebench
