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

#include "vqebench/pauli.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "vqebench/errors.hpp"

namespace vqebench {
namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

std::uint64_t register_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

const cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_same_register(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": qubit counts differ (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

bool negligible(cplx c) { return std::abs(c) < kPruneThreshold; }

}  // namespace

std::size_t PauliKey::weight() const noexcept {
  return static_cast<std::size_t>(popcount(x | z));
}

bool PauliKey::commutes_with(const PauliKey& other) const noexcept {
  return ((popcount(x & other.z) + popcount(z & other.x)) & 1) == 0;
}

cplx product_phase(const PauliKey& a, const PauliKey& b) noexcept {
  // P = i^{|x&z|} X^x Z^z, and Z^za X^xb = (-1)^{|za&xb|} X^xb Z^za.
  const std::uint64_t x = a.x ^ b.x;
  const std::uint64_t z = a.z ^ b.z;
  int k = popcount(a.x & a.z) + popcount(b.x & b.z) - popcount(x & z) +
          2 * popcount(a.z & b.x);
  k = ((k % 4) + 4) % 4;
  return kIPowers[k];
}

PauliTerm::PauliTerm(std::size_t n_qubits, PauliKey key, cplx coefficient)
    : n_qubits_(n_qubits), key_(key), coefficient_(coefficient) {
  if (n_qubits > kMaxQubits) {
    throw ResourceLimitError("PauliTerm supports at most 64 qubits");
  }
  const auto mask = register_mask(n_qubits);
  if ((key.x & ~mask) != 0 || (key.z & ~mask) != 0) {
    throw DimensionError("PauliTerm: mask addresses a qubit beyond n_qubits");
  }
}

PauliTerm PauliTerm::from_label(std::size_t n_qubits, const std::string& label,
                                cplx coefficient) {
  PauliKey key;
  std::istringstream in(label);
  std::string tok;
  while (in >> tok) {
    if (tok == "I") continue;
    if (tok.size() < 2) throw ContractError("bad Pauli label token '" + tok + "'");
    const char p = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    const std::size_t q = std::stoul(tok.substr(1));
    if (q >= n_qubits) throw DimensionError("Pauli label qubit out of range: " + tok);
    const std::uint64_t bit = std::uint64_t{1} << q;
    if ((key.x | key.z) & bit) throw ContractError("repeated qubit in Pauli label: " + tok);
    switch (p) {
      case 'X': key.x |= bit; break;
      case 'Y': key.x |= bit; key.z |= bit; break;
      case 'Z': key.z |= bit; break;
      default: throw ContractError("bad Pauli label token '" + tok + "'");
    }
  }
  return PauliTerm(n_qubits, key, coefficient);
}

bool PauliTerm::is_hermitian(double tol) const noexcept {
  return std::abs(coefficient_.imag()) <= tol;
}

char PauliTerm::factor(std::size_t q) const noexcept {
  const bool x = (key_.x >> q) & 1;
  const bool z = (key_.z >> q) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliTerm::label() const {
  if (is_identity()) return "I";
  std::string out;
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    const char f = factor(q);
    if (f == 'I') continue;
    if (!out.empty()) out += ' ';
    out += f;
    out += std::to_string(q);
  }
  return out;
}

std::string PauliTerm::to_string() const {
  return format_coefficient(coefficient_) + " " + label();
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  require_same_register(a.n_qubits(), b.n_qubits(), "multiply");
  const PauliKey key{a.z_mask() ^ b.z_mask(), a.x_mask() ^ b.x_mask()};
  return PauliTerm(a.n_qubits(), key,
                   a.coefficient() * b.coefficient() * product_phase(a.key(), b.key()));
}

PauliSum::PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > kMaxQubits) throw ResourceLimitError("PauliSum supports at most 64 qubits");
}

PauliSum::PauliSum(const PauliTerm& term) : n_qubits_(term.n_qubits()) {
  accumulate(term);
}

PauliSum PauliSum::identity(std::size_t n_qubits, cplx coefficient) {
  PauliSum s(n_qubits);
  s.accumulate(PauliKey{}, coefficient);
  return s;
}

cplx PauliSum::coefficient(const PauliKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? cplx{} : it->second;
}

std::size_t PauliSum::non_identity_count() const noexcept {
  return terms_.size() - (terms_.count(PauliKey{}) ? 1 : 0);
}

bool PauliSum::is_hermitian(double tol) const noexcept {
  for (const auto& [key, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

bool PauliSum::is_anti_hermitian(double tol) const noexcept {
  for (const auto& [key, c] : terms_) {
    if (std::abs(c.real()) > tol) return false;
  }
  return true;
}

bool PauliSum::terms_mutually_commute() const noexcept {
  for (auto a = terms_.begin(); a != terms_.end(); ++a) {
    for (auto b = std::next(a); b != terms_.end(); ++b) {
      if (!a->first.commutes_with(b->first)) return false;
    }
  }
  return true;
}

void PauliSum::accumulate(const PauliKey& key, cplx coefficient) {
  const auto mask = register_mask(n_qubits_);
  if ((key.x & ~mask) != 0 || (key.z & ~mask) != 0) {
    throw DimensionError("PauliSum: term addresses a qubit beyond n_qubits");
  }
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) it->second += coefficient;
  if (negligible(it->second)) terms_.erase(it);
}

void PauliSum::accumulate(const PauliTerm& term) {
  require_same_register(n_qubits_, term.n_qubits(), "accumulate");
  accumulate(term.key(), term.coefficient());
}

PauliSum PauliSum::scaled(cplx factor) const {
  PauliSum out(n_qubits_);
  for (const auto& [key, c] : terms_) out.accumulate(key, c * factor);
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  for (const auto& [key, c] : terms_) out.accumulate(key, std::conj(c));
  return out;
}

double PauliSum::max_abs_difference(const PauliSum& other) const {
  require_same_register(n_qubits_, other.n_qubits_, "max_abs_difference");
  double worst = 0.0;
  for (const auto& [key, c] : terms_) {
    worst = std::max(worst, std::abs(c - other.coefficient(key)));
  }
  for (const auto& [key, c] : other.terms_) {
    if (!terms_.count(key)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

std::vector<PauliTerm> PauliSum::term_list() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.emplace_back(n_qubits_, key, c);
  return out;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += PauliTerm(n_qubits_, key, c).to_string();
  }
  return out;
}

PauliSum add(const PauliSum& a, const PauliSum& b) {
  require_same_register(a.n_qubits(), b.n_qubits(), "add");
  PauliSum out = a;
  for (const auto& [key, c] : b.terms()) out.accumulate(key, c);
  return out;
}

PauliSum subtract(const PauliSum& a, const PauliSum& b) {
  require_same_register(a.n_qubits(), b.n_qubits(), "subtract");
  PauliSum out = a;
  for (const auto& [key, c] : b.terms()) out.accumulate(key, -c);
  return out;
}

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  require_same_register(a.n_qubits(), b.n_qubits(), "multiply");
  // Accumulate unpruned so intermediate cancellations are exact, then prune.
  std::map<PauliKey, cplx> acc;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const PauliKey key{ka.z ^ kb.z, ka.x ^ kb.x};
      acc[key] += ca * cb * product_phase(ka, kb);
    }
  }
  PauliSum out(a.n_qubits());
  for (const auto& [key, c] : acc) out.accumulate(key, c);
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  require_same_register(a.n_qubits(), b.n_qubits(), "commutator");
  std::map<PauliKey, cplx> acc;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.commutes_with(kb)) continue;
      const PauliKey key{ka.z ^ kb.z, ka.x ^ kb.x};
      acc[key] += 2.0 * ca * cb * product_phase(ka, kb);
    }
  }
  PauliSum out(a.n_qubits());
  for (const auto& [key, c] : acc) out.accumulate(key, c);
  return out;
}

Eigen::MatrixXcd to_matrix(const PauliSum& s, std::size_t qubit_cap) {
  if (s.n_qubits() > qubit_cap) {
    throw ResourceLimitError("to_matrix: " + std::to_string(s.n_qubits()) +
                             " qubits exceeds cap of " + std::to_string(qubit_cap));
  }
  const std::size_t dim = std::size_t{1} << s.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, c] : s.terms()) {
    const cplx base = c * kIPowers[popcount(key.x & key.z) % 4];
    for (std::size_t col = 0; col < dim; ++col) {
      const bool odd = popcount(col & key.z) & 1;
      m(col ^ key.x, col) += odd ? -base : base;
    }
  }
  return m;
}

Eigen::MatrixXcd to_matrix(const PauliTerm& t, std::size_t qubit_cap) {
  return to_matrix(PauliSum(t), qubit_cap);
}

std::string format_coefficient(cplx c) {
  auto clean = [](double v) { return v == 0.0 ? 0.0 : v; };
  const double re = clean(c.real());
  const double im = clean(c.imag());
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.12g%c%.12gi)", re, im < 0 ? '-' : '+',
                std::abs(im));
  return buf;
}

}  // namespace vqebench
