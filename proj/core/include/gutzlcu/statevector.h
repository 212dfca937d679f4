// Copyright 2026 The gutzlcu Authors
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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gutzlcu/common.h"
#include "gutzlcu/pauli.h"

namespace gutzlcu {

/// Dense n-qubit state. Qubit 0 is the most significant bit of the amplitude
/// index, so |q0 q1 ... q_{n-1}> reads left to right like a ket.
class StateVector {
 public:
  StateVector() = default;
  /// |0...0>.
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  /// Computational basis state |index>.
  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<Complex> amplitudes() { return amps_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  double norm() const;
  /// Rescales to unit norm and returns the previous norm.
  double normalize();

  /// Bit position (from the LSB) of a qubit.
  int bit_of(int qubit) const { return n_qubits_ - 1 - qubit; }

 private:
  int n_qubits_ = 0;
  std::vector<Complex> amps_;
};

enum class GateKind { kH, kX, kSdg, kRz, kRx, kCnot, kCrz, kSwap };

std::string to_string(GateKind kind);

/// target is the acted-on qubit; control is used by CNOT and CRZ; for SWAP
/// the second qubit lives in `control`.
struct Gate {
  GateKind kind = GateKind::kH;
  int target = 0;
  int control = -1;
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::kH, q, -1, 0.0}; }
  static Gate x(int q) { return {GateKind::kX, q, -1, 0.0}; }
  static Gate sdg(int q) { return {GateKind::kSdg, q, -1, 0.0}; }
  static Gate rz(int q, double theta) { return {GateKind::kRz, q, -1, theta}; }
  static Gate rx(int q, double theta) { return {GateKind::kRx, q, -1, theta}; }
  static Gate cnot(int control, int target) {
    return {GateKind::kCnot, target, control, 0.0};
  }
  static Gate crz(int control, int target, double theta) {
    return {GateKind::kCrz, target, control, theta};
  }
  static Gate swap(int a, int b) { return {GateKind::kSwap, a, b, 0.0}; }
};

using Circuit = std::vector<Gate>;

/// R_Z(theta) = diag(e^{-i theta/2}, e^{+i theta/2}).
void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

/// Inverse circuit (reversed order, negated angles, S-dagger replaced by S
/// realized as three S-dagger gates).
Circuit inverse(const Circuit& circuit);

/// Dense 2x2 or 4x4 unitary of a gate in the (target) or (control, target)
/// basis ordering, control as the left factor. SWAP uses (control, target).
std::vector<std::vector<Complex>> gate_matrix(const Gate& gate);

/// out = P|in> for one Pauli term, accumulated into `out`.
void accumulate_pauli_term(const PauliTerm& term, std::span<const Complex> in,
                           std::span<Complex> out);

/// Matrix-free O|state>.
StateVector apply_pauli_sum(const PauliSum& op, const StateVector& state);

/// <state|O|state>.
Complex expectation(const StateVector& state, const PauliSum& op);

/// <bra|ket>.
Complex inner_product(const StateVector& bra, const StateVector& ket);

/// <bra|O|ket>; O is the identity when `op` is null.
Complex matrix_element(const StateVector& bra, const PauliSum* op,
                       const StateVector& ket);

/// Dense matrix of a Pauli sum, row-major; intended for n_qubits <= 12.
std::vector<Complex> dense_matrix(const PauliSum& op);

/// Writes an 8-byte little-endian qubit count followed by interleaved
/// little-endian (real, imag) doubles.
void write_amplitudes(const StateVector& state, const std::string& path);
StateVector read_amplitudes(const std::string& path);

}  // namespace gutzlcu
