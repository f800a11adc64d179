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

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace vqebench {

using cplx = std::complex<double>;

/// Coefficients with magnitude below this are dropped from every PauliSum.
inline constexpr double kPruneThreshold = 1e-12;

/// Largest register a PauliString can address (one 64-bit word per mask).
inline constexpr std::size_t kMaxQubits = 64;

/// Default qubit cap for dense matrix materialisation.
inline constexpr std::size_t kDefaultMatrixQubitCap = 12;

/// Symplectic key of a Pauli string. Qubit q carries X if bit q of `x` is
/// set, Z if bit q of `z` is set, and Y if both are set.
struct PauliKey {
  std::uint64_t z = 0;
  std::uint64_t x = 0;

  // Canonical ordering is lexicographic by (z, x).
  friend auto operator<=>(const PauliKey&, const PauliKey&) = default;

  bool is_identity() const noexcept { return x == 0 && z == 0; }
  std::size_t weight() const noexcept;
  /// True if the two strings commute (even symplectic product).
  bool commutes_with(const PauliKey& other) const noexcept;
};

/// A single Pauli string with a complex coefficient. The coefficient
/// multiplies the literal tensor product of I/X/Y/Z factors, so Y phases
/// are already accounted for.
class PauliTerm {
 public:
  PauliTerm() = default;
  PauliTerm(std::size_t n_qubits, PauliKey key, cplx coefficient);

  /// Parses a compact label such as "X0 Z1 Y3" (an empty label is identity).
  static PauliTerm from_label(std::size_t n_qubits, const std::string& label,
                              cplx coefficient = 1.0);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const PauliKey& key() const noexcept { return key_; }
  std::uint64_t x_mask() const noexcept { return key_.x; }
  std::uint64_t z_mask() const noexcept { return key_.z; }
  cplx coefficient() const noexcept { return coefficient_; }
  bool is_identity() const noexcept { return key_.is_identity(); }
  bool is_hermitian(double tol = kPruneThreshold) const noexcept;

  /// Single-qubit factor on qubit q: one of 'I', 'X', 'Y', 'Z'.
  char factor(std::size_t q) const noexcept;

  /// Renders "X0 Z1 Y3" (or "I" for identity), without the coefficient.
  std::string label() const;
  std::string to_string() const;

 private:
  std::size_t n_qubits_ = 0;
  PauliKey key_{};
  cplx coefficient_{0.0, 0.0};
};

/// Operator product a*b with the i-power phase folded into the coefficient.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/// Phase i^k (k in 0..3) of the product of two unit-coefficient strings.
cplx product_phase(const PauliKey& a, const PauliKey& b) noexcept;

/// Linear combination of Pauli strings over a fixed register. Stored sparse
/// and canonically ordered; coefficients below kPruneThreshold never stay.
class PauliSum {
 public:
  using TermMap = std::map<PauliKey, cplx>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits);
  explicit PauliSum(const PauliTerm& term);

  static PauliSum identity(std::size_t n_qubits, cplx coefficient = 1.0);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of the given string (0 if absent).
  cplx coefficient(const PauliKey& key) const;
  /// Number of stored terms other than the identity.
  std::size_t non_identity_count() const noexcept;

  bool is_hermitian(double tol = kPruneThreshold) const noexcept;
  bool is_anti_hermitian(double tol = kPruneThreshold) const noexcept;
  /// True if every pair of stored strings commutes.
  bool terms_mutually_commute() const noexcept;

  /// Adds a term in place (used while building sums); prunes the slot.
  void accumulate(const PauliKey& key, cplx coefficient);
  void accumulate(const PauliTerm& term);

  PauliSum scaled(cplx factor) const;
  PauliSum adjoint() const;

  /// Largest coefficient-wise difference to another sum of the same size.
  double max_abs_difference(const PauliSum& other) const;

  /// Terms in canonical order, as PauliTerm values.
  std::vector<PauliTerm> term_list() const;

  /// e.g. "(-0.5+0i) X0 Z1 Y3 + (0.25+0i) I"; empty sum renders as "0".
  std::string to_string() const;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  std::size_t n_qubits_ = 0;
  TermMap terms_;
};

PauliSum add(const PauliSum& a, const PauliSum& b);
PauliSum subtract(const PauliSum& a, const PauliSum& b);
PauliSum multiply(const PauliSum& a, const PauliSum& b);
/// ab - ba, using the fact that two strings either commute or anticommute.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

inline PauliSum operator+(const PauliSum& a, const PauliSum& b) { return add(a, b); }
inline PauliSum operator-(const PauliSum& a, const PauliSum& b) { return subtract(a, b); }
inline PauliSum operator*(const PauliSum& a, const PauliSum& b) { return multiply(a, b); }
inline PauliSum operator*(cplx c, const PauliSum& a) { return a.scaled(c); }

/// Dense 2^n x 2^n matrix; qubit 0 is the least-significant index bit and
/// Z|0> = +|0>.
Eigen::MatrixXcd to_matrix(const PauliSum& s,
                           std::size_t qubit_cap = kDefaultMatrixQubitCap);
Eigen::MatrixXcd to_matrix(const PauliTerm& t,
                           std::size_t qubit_cap = kDefaultMatrixQubitCap);

/// Formats a complex number as "(re+imi)", e.g. "(-0.5+0i)".
std::string format_coefficient(cplx c);

}  // namespace vqebench
