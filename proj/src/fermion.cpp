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

#include "vqebench/fermion.hpp"

#include <algorithm>
#include <sstream>

#include "vqebench/errors.hpp"

namespace vqebench {

LadderProduct LadderProduct::adjoint() const {
  LadderProduct out;
  out.coefficient = std::conj(coefficient);
  out.factors.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    out.factors.push_back({it->index, !it->dagger});
  }
  return out;
}

bool LadderProduct::is_excitation_ordered() const noexcept {
  bool seen_annihilator = false;
  for (const auto& f : factors) {
    if (f.dagger && seen_annihilator) return false;
    if (!f.dagger) seen_annihilator = true;
  }
  return true;
}

std::string LadderProduct::to_string() const {
  std::ostringstream out;
  out << format_coefficient(coefficient);
  for (const auto& f : factors) out << ' ' << f.index << (f.dagger ? "^" : "");
  return out.str();
}

FermionOperator::FermionOperator(std::size_t n_spin_orbitals)
    : n_spin_orbitals_(n_spin_orbitals) {}

FermionOperator::FermionOperator(std::size_t n_spin_orbitals,
                                 std::vector<LadderProduct> products)
    : n_spin_orbitals_(n_spin_orbitals) {
  for (auto& p : products) add(std::move(p));
}

void FermionOperator::add(LadderProduct product) {
  for (const auto& f : product.factors) {
    if (f.index >= n_spin_orbitals_) {
      throw DimensionError("ladder operator index " + std::to_string(f.index) +
                           " >= n_spin_orbitals " + std::to_string(n_spin_orbitals_));
    }
  }
  products_.push_back(std::move(product));
}

void FermionOperator::add(std::vector<LadderOp> factors, cplx coefficient) {
  add(LadderProduct{std::move(factors), coefficient});
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(n_spin_orbitals_);
  for (const auto& p : products_) out.products_.push_back(p.adjoint());
  return out;
}

FermionOperator FermionOperator::scaled(cplx factor) const {
  FermionOperator out = *this;
  for (auto& p : out.products_) p.coefficient *= factor;
  return out;
}

std::string FermionOperator::to_string() const {
  if (products_.empty()) return "0";
  std::string out;
  for (const auto& p : products_) {
    if (!out.empty()) out += " + ";
    out += p.to_string();
  }
  return out;
}

FermionOperator operator+(const FermionOperator& a, const FermionOperator& b) {
  if (a.n_spin_orbitals() != b.n_spin_orbitals()) {
    throw DimensionError("FermionOperator +: spin-orbital counts differ");
  }
  FermionOperator out = a;
  for (const auto& p : b.products()) out.add(p);
  return out;
}

FermionOperator operator-(const FermionOperator& a, const FermionOperator& b) {
  return a + b.scaled(-1.0);
}

FermionOperator anti_hermitian_pair(const FermionOperator& t) {
  for (const auto& p : t.products()) {
    if (!p.is_excitation_ordered()) {
      throw ContractError("anti_hermitian_pair: product '" + p.to_string() +
                          "' is not an excitation (creators must precede annihilators)");
    }
  }
  return t - t.adjoint();
}

PauliSum jordan_wigner_ladder(std::size_t index, bool dagger, std::size_t n_qubits) {
  if (index >= n_qubits) throw DimensionError("jordan_wigner: index beyond register");
  const std::uint64_t bit = std::uint64_t{1} << index;
  const std::uint64_t parity = bit - 1;
  PauliSum out(n_qubits);
  out.accumulate(PauliKey{parity, bit}, 0.5);                                     // X_p
  out.accumulate(PauliKey{parity | bit, bit}, dagger ? cplx{0, -0.5} : cplx{0, 0.5});  // Y_p
  return out;
}

PauliSum map_to_qubits(const FermionOperator& f, const LadderMap& map) {
  const std::size_t n = f.n_spin_orbitals();
  std::vector<PauliSum> create_img, annihilate_img;
  create_img.reserve(n);
  annihilate_img.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    create_img.push_back(map(p, true, n));
    annihilate_img.push_back(map(p, false, n));
  }
  PauliSum out(n);
  for (const auto& prod : f.products()) {
    PauliSum term = PauliSum::identity(n, prod.coefficient);
    for (const auto& op : prod.factors) {
      term = multiply(term, op.dagger ? create_img[op.index] : annihilate_img[op.index]);
      if (term.empty()) break;
    }
    for (const auto& [key, c] : term.terms()) out.accumulate(key, c);
  }
  return out;
}

PauliSum jordan_wigner(const FermionOperator& f) {
  return map_to_qubits(f, jordan_wigner_ladder);
}

bool verify_car(std::size_t n, const LadderMap& map) {
  if (n == 0) return true;
  if (n > 8) throw ResourceLimitError("verify_car supports n <= 8");
  std::vector<Eigen::MatrixXcd> a(n), ad(n);
  for (std::size_t p = 0; p < n; ++p) {
    a[p] = to_matrix(map(p, false, n));
    ad[p] = to_matrix(map(p, true, n));
  }
  const auto dim = a[0].rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  constexpr double tol = 1e-12;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Eigen::MatrixXcd mixed = a[p] * ad[q] + ad[q] * a[p];
      const Eigen::MatrixXcd expected = p == q ? id : Eigen::MatrixXcd::Zero(dim, dim);
      if ((mixed - expected).cwiseAbs().maxCoeff() > tol) return false;
      const Eigen::MatrixXcd pure = a[p] * a[q] + a[q] * a[p];
      if (pure.cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

PauliSum number_operator(std::size_t n_spin_orbitals) {
  FermionOperator f(n_spin_orbitals);
  for (std::size_t p = 0; p < n_spin_orbitals; ++p) f.add({create(p), annihilate(p)}, 1.0);
  return jordan_wigner(f);
}

PauliSum sz_operator(std::size_t n_spin_orbitals) {
  FermionOperator f(n_spin_orbitals);
  for (std::size_t p = 0; p < n_spin_orbitals; ++p) {
    f.add({create(p), annihilate(p)}, p % 2 == 0 ? 0.5 : -0.5);
  }
  return jordan_wigner(f);
}

}  // namespace vqebench
