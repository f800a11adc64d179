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

#include "vqebench/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "vqebench/errors.hpp"

namespace vqebench {

void GateCircuit::check_qubit(std::size_t q) const {
  if (q >= n_qubits_) {
    throw DimensionError("gate qubit " + std::to_string(q) + " outside a " +
                         std::to_string(n_qubits_) + "-qubit circuit");
  }
}

void GateCircuit::append(const Gate& g) {
  check_qubit(g.qubit);
  if (g.kind == GateKind::CNOT) {
    check_qubit(g.target);
    if (g.qubit == g.target) throw ContractError("CNOT control and target must differ");
  }
  gates_.push_back(g);
}

void GateCircuit::h(std::size_t q) { append({GateKind::H, q, 0, 0.0}); }
void GateCircuit::rx(double angle, std::size_t q) { append({GateKind::RX, q, 0, angle}); }
void GateCircuit::rz(double angle, std::size_t q) { append({GateKind::RZ, q, 0, angle}); }
void GateCircuit::cnot(std::size_t control, std::size_t target) {
  append({GateKind::CNOT, control, target, 0.0});
}

void GateCircuit::append_pauli_rotation(const PauliKey& key, double angle) {
  std::vector<std::size_t> support;
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    if (((key.x | key.z) >> q) & 1) support.push_back(q);
  }
  if (support.empty()) return;  // global phase only
  constexpr double half_pi = std::numbers::pi / 2;
  auto is_x = [&](std::size_t q) { return ((key.x >> q) & 1) && !((key.z >> q) & 1); };
  auto is_y = [&](std::size_t q) { return ((key.x >> q) & 1) && ((key.z >> q) & 1); };

  // Y = RX(-pi/2) Z RX(pi/2) and X = H Z H.
  for (auto q : support) {
    if (is_x(q)) h(q);
    if (is_y(q)) rx(half_pi, q);
  }
  for (std::size_t k = 0; k + 1 < support.size(); ++k) cnot(support[k], support[k + 1]);
  rz(-2.0 * angle, support.back());
  for (std::size_t k = support.size() - 1; k-- > 0;) cnot(support[k], support[k + 1]);
  for (auto q : support) {
    if (is_x(q)) h(q);
    if (is_y(q)) rx(-half_pi, q);
  }
}

std::string GateCircuit::to_text() const {
  std::string out;
  char buf[96];
  for (const auto& g : gates_) {
    switch (g.kind) {
      case GateKind::H: std::snprintf(buf, sizeof buf, "H %zu\n", g.qubit); break;
      case GateKind::RX: std::snprintf(buf, sizeof buf, "RX %.17g %zu\n", g.angle, g.qubit); break;
      case GateKind::RZ: std::snprintf(buf, sizeof buf, "RZ %.17g %zu\n", g.angle, g.qubit); break;
      case GateKind::CNOT:
        std::snprintf(buf, sizeof buf, "CNOT %zu %zu\n", g.qubit, g.target);
        break;
    }
    out += buf;
  }
  return out;
}

GateCircuit GateCircuit::from_text(std::size_t n_qubits, const std::string& text) {
  GateCircuit c(n_qubits);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream f(line);
    std::string op;
    if (!(f >> op)) continue;
    bool ok = true;
    if (op == "H") {
      std::size_t q;
      ok = static_cast<bool>(f >> q);
      if (ok) c.h(q);
    } else if (op == "RX" || op == "RZ") {
      double a;
      std::size_t q;
      ok = static_cast<bool>(f >> a >> q);
      if (ok) op == "RX" ? c.rx(a, q) : c.rz(a, q);
    } else if (op == "CNOT") {
      std::size_t a, b;
      ok = static_cast<bool>(f >> a >> b);
      if (ok) c.cnot(a, b);
    } else {
      ok = false;
    }
    if (!ok) throw ParseError("malformed gate '" + line + "'", line_no);
  }
  return c;
}

CircuitMetrics circuit_metrics(const GateCircuit& c) {
  std::vector<std::size_t> level(c.n_qubits(), 0);
  std::size_t depth = 0;
  for (const auto& g : c.gates()) {
    std::size_t layer = level[g.qubit] + 1;
    if (g.kind == GateKind::CNOT) {
      layer = std::max(layer, level[g.target] + 1);
      level[g.target] = layer;
    }
    level[g.qubit] = layer;
    depth = std::max(depth, layer);
  }
  return {c.size(), depth};
}

StateVector simulate(const GateCircuit& c, const StateVector& s) {
  if (c.n_qubits() != s.n_qubits()) throw ContractError("simulate: qubit counts differ");
  std::vector<cplx> a(s.amplitudes().begin(), s.amplitudes().end());
  const std::size_t dim = a.size();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const auto& g : c.gates()) {
    const std::size_t bit = std::size_t{1} << g.qubit;
    switch (g.kind) {
      case GateKind::H:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & bit) continue;
          const cplx u = a[i], v = a[i | bit];
          a[i] = (u + v) * inv_sqrt2;
          a[i | bit] = (u - v) * inv_sqrt2;
        }
        break;
      case GateKind::RX: {
        const double co = std::cos(g.angle / 2);
        const cplx msi{0.0, -std::sin(g.angle / 2)};
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & bit) continue;
          const cplx u = a[i], v = a[i | bit];
          a[i] = co * u + msi * v;
          a[i | bit] = msi * u + co * v;
        }
        break;
      }
      case GateKind::RZ: {
        const cplx down = std::polar(1.0, -g.angle / 2), up = std::polar(1.0, g.angle / 2);
        for (std::size_t i = 0; i < dim; ++i) a[i] *= (i & bit) ? up : down;
        break;
      }
      case GateKind::CNOT: {
        const std::size_t t = std::size_t{1} << g.target;
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & bit) && !(i & t)) std::swap(a[i], a[i | t]);
        }
        break;
      }
    }
  }
  return StateVector::from_amplitudes(s.n_qubits(), std::move(a));
}

}  // namespace vqebench
