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

// Dense reference implementations used only by the tests. Nothing here goes
// through the library's Pauli algebra or Jordan-Wigner code.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "vqebench/hamiltonian.hpp"
#include "vqebench/statevector.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cplx = std::complex<double>;

inline Mat pauli(char p) {
  Mat m(2, 2);
  const cplx i(0, 1);
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

/// factors[q] acts on qubit q; qubit 0 is the least significant index bit.
inline Mat tensor(const std::vector<Mat>& factors) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& f : factors) out = kron(f, out);
  return out;
}

/// Pauli string from a per-qubit letter list, e.g. "XIZ" = X on qubit 0.
inline Mat pauli_string(const std::string& letters) {
  std::vector<Mat> f;
  for (char c : letters) f.push_back(pauli(c));
  return tensor(f);
}

/// a_p or a_p^dagger with occupied = |1>, Z parity string on lower qubits.
inline Mat ladder(std::size_t p, bool dagger, std::size_t n) {
  Mat raise(2, 2);  // |1><0|
  raise << 0, 0, 1, 0;
  std::vector<Mat> f;
  for (std::size_t q = 0; q < n; ++q) {
    if (q < p) f.push_back(pauli('Z'));
    else if (q == p) f.push_back(dagger ? raise : Mat(raise.adjoint()));
    else f.push_back(pauli('I'));
  }
  return tensor(f);
}

inline Mat number_matrix(std::size_t n) {
  Mat out = Mat::Zero(1 << n, 1 << n);
  for (std::size_t p = 0; p < n; ++p) out += ladder(p, true, n) * ladder(p, false, n);
  return out;
}

/// Electronic Hamiltonian (core excluded) assembled from ladder matrices with
/// spin orbital 2m = alpha, 2m+1 = beta of spatial orbital m.
inline Mat hamiltonian_matrix(const vqebench::MolecularHamiltonian& m) {
  const std::size_t n = m.n_spin_orbitals();
  std::vector<Mat> c, a;
  for (std::size_t p = 0; p < n; ++p) {
    c.push_back(ladder(p, true, n));
    a.push_back(ladder(p, false, n));
  }
  Mat h = Mat::Zero(1 << n, 1 << n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p % 2 == q % 2) h += m.h1(p / 2, q / 2) * c[p] * a[q];
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          if (p % 2 != r % 2 || q % 2 != s % 2) continue;
          const double v = m.eri(p / 2, r / 2, q / 2, s / 2);
          if (v == 0.0) continue;
          h += 0.5 * v * c[p] * c[q] * a[s] * a[r];
        }
  return h;
}

/// Closed-shell determinant energy with the lowest n_electrons/2 spatial
/// orbitals doubly occupied.
inline double hartree_fock_energy(const vqebench::MolecularHamiltonian& m) {
  const std::size_t occ = m.n_electrons / 2;
  double e = m.core_energy;
  for (std::size_t i = 0; i < occ; ++i) e += 2.0 * m.h1(i, i);
  for (std::size_t i = 0; i < occ; ++i)
    for (std::size_t j = 0; j < occ; ++j) e += 2.0 * m.eri(i, i, j, j) - m.eri(i, j, j, i);
  return e;
}

/// Lowest eigenvalue in the n_electrons sector, found by diagonalising the
/// whole space with a particle-number penalty.
inline double penalized_ground_energy(const Mat& h, std::size_t n_qubits, std::size_t n_electrons,
                                      double mu = 50.0) {
  const Mat nn = number_matrix(n_qubits) - static_cast<double>(n_electrons) * Mat::Identity(h.rows(), h.cols());
  const Mat shifted = h + mu * nn * nn;
  Eigen::SelfAdjointEigenSolver<Mat> es(shifted);
  return es.eigenvalues()(0);
}

inline Mat expm(const Mat& a) { return a.exp(); }

inline Vec to_vec(const vqebench::StateVector& s) {
  Vec v(static_cast<Eigen::Index>(s.dimension()));
  for (std::size_t i = 0; i < s.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

inline double max_diff(const Vec& a, const vqebench::StateVector& b) {
  return (a - to_vec(b)).cwiseAbs().maxCoeff();
}

/// Random normalised state restricted to basis states with `popcount` ones,
/// or unrestricted when popcount < 0.
inline vqebench::StateVector random_state(std::size_t n, std::mt19937_64& rng, int popcount = -1) {
  std::normal_distribution<double> g;
  std::vector<cplx> amps(std::size_t{1} << n);
  for (std::size_t i = 0; i < amps.size(); ++i)
    if (popcount < 0 || __builtin_popcountll(i) == popcount) amps[i] = cplx(g(rng), g(rng));
  return vqebench::StateVector::normalized(n, amps);
}

}  // namespace oracle
