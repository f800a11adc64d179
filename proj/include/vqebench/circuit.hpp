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
#include <string>
#include <vector>

#include "vqebench/statevector.hpp"

namespace vqebench {

enum class GateKind { H, RX, RZ, CNOT };

/// RX(phi) = exp(-i phi X / 2), RZ(phi) = exp(-i phi Z / 2). For CNOT,
/// `qubit` is the control and `target` the target.
struct Gate {
  GateKind kind = GateKind::H;
  std::size_t qubit = 0;
  std::size_t target = 0;
  double angle = 0.0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class GateCircuit {
 public:
  GateCircuit() = default;
  explicit GateCircuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  void h(std::size_t q);
  void rx(double angle, std::size_t q);
  void rz(double angle, std::size_t q);
  void cnot(std::size_t control, std::size_t target);
  void append(const Gate& g);

  /// Appends exp(i * angle * P) for the unit string P: basis changes, a
  /// CNOT ladder onto the highest support qubit, RZ, and the mirror image.
  void append_pauli_rotation(const PauliKey& key, double angle);

  /// One gate per line: "H 0", "RX 1.5707963267948966 2", "RZ 0.123 2",
  /// "CNOT 0 1".
  std::string to_text() const;
  static GateCircuit from_text(std::size_t n_qubits, const std::string& text);

  friend bool operator==(const GateCircuit&, const GateCircuit&) = default;

 private:
  void check_qubit(std::size_t q) const;

  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
};

struct CircuitMetrics {
  std::size_t gate_count = 0;
  std::size_t depth = 0;

  friend bool operator==(const CircuitMetrics&, const CircuitMetrics&) = default;
};

/// Gate count and as-soon-as-possible layered depth.
CircuitMetrics circuit_metrics(const GateCircuit& c);

/// Runs the circuit on a copy of `s`, gate by gate.
StateVector simulate(const GateCircuit& c, const StateVector& s);

}  // namespace vqebench
