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

#include "gutzlcu/statevector.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace gutzlcu {

namespace {

constexpr int kMaxQubits = 30;

void check_qubit(const StateVector& s, int q) {
  if (q < 0 || q >= s.n_qubits()) {
    throw std::out_of_range("qubit " + std::to_string(q) + " outside a " +
                            std::to_string(s.n_qubits()) + "-qubit register");
  }
}

using Mat2 = std::array<Complex, 4>;  // row-major

Mat2 single_matrix(const Gate& g) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  switch (g.kind) {
    case GateKind::kH: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::kX: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kSdg: return {1.0, 0.0, 0.0, -i};
    case GateKind::kRz:
    case GateKind::kCrz:
      return {std::exp(-i * (g.angle / 2)), 0.0, 0.0, std::exp(i * (g.angle / 2))};
    case GateKind::kRx: {
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      return {c, -i * s, -i * s, c};
    }
    default: break;
  }
  throw std::logic_error("not a single-qubit gate");
}

// Applies m to the target bit on every index whose `control_mask` bits are set.
void apply_single(StateVector& state, int target_bit, std::uint64_t control_mask,
                  const Mat2& m) {
  auto amps = state.amplitudes();
  const std::uint64_t stride = std::uint64_t{1} << target_bit;
  const std::uint64_t dim = amps.size();
  const bool diagonal = m[1] == Complex{} && m[2] == Complex{};
  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    for (std::uint64_t k = base; k < base + stride; ++k) {
      if ((k & control_mask) != control_mask) continue;
      const Complex a0 = amps[k];
      const Complex a1 = amps[k + stride];
      if (diagonal) {
        amps[k] = m[0] * a0;
        amps[k + stride] = m[3] * a1;
      } else {
        amps[k] = m[0] * a0 + m[1] * a1;
        amps[k + stride] = m[2] * a0 + m[3] * a1;
      }
    }
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(n_qubits));
  }
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                " is not 2^" + std::to_string(n_qubits));
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw std::out_of_range("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

double StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize a zero state");
  for (auto& a : amps_) a /= n;
  return n;
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kX: return "X";
    case GateKind::kSdg: return "Sdg";
    case GateKind::kRz: return "RZ";
    case GateKind::kRx: return "RX";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kCrz: return "CRZ";
    case GateKind::kSwap: return "SWAP";
  }
  return "?";
}

void apply_gate(StateVector& state, const Gate& gate) {
  if (!std::isfinite(gate.angle)) throw std::invalid_argument("gate angle is not finite");
  check_qubit(state, gate.target);
  switch (gate.kind) {
    case GateKind::kH:
    case GateKind::kX:
    case GateKind::kSdg:
    case GateKind::kRz:
    case GateKind::kRx:
      apply_single(state, state.bit_of(gate.target), 0, single_matrix(gate));
      return;
    case GateKind::kCnot:
    case GateKind::kCrz: {
      check_qubit(state, gate.control);
      if (gate.control == gate.target) {
        throw std::invalid_argument("control and target coincide");
      }
      const std::uint64_t cmask = std::uint64_t{1} << state.bit_of(gate.control);
      const Mat2 m = gate.kind == GateKind::kCnot ? Mat2{0.0, 1.0, 1.0, 0.0}
                                                  : single_matrix(gate);
      apply_single(state, state.bit_of(gate.target), cmask, m);
      return;
    }
    case GateKind::kSwap: {
      check_qubit(state, gate.control);
      if (gate.control == gate.target) throw std::invalid_argument("SWAP of a qubit with itself");
      const std::uint64_t ba = std::uint64_t{1} << state.bit_of(gate.target);
      const std::uint64_t bb = std::uint64_t{1} << state.bit_of(gate.control);
      auto amps = state.amplitudes();
      for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & ba) && !(k & bb)) std::swap(amps[k], amps[(k ^ ba) | bb]);
      }
      return;
    }
  }
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  for (const auto& g : circuit) apply_gate(state, g);
}

Circuit inverse(const Circuit& circuit) {
  Circuit out;
  out.reserve(circuit.size());
  for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
    Gate g = *it;
    switch (g.kind) {
      case GateKind::kRz:
      case GateKind::kRx:
      case GateKind::kCrz:
        g.angle = -g.angle;
        out.push_back(g);
        break;
      case GateKind::kSdg:
        out.insert(out.end(), 3, g);
        break;
      default:
        out.push_back(g);
    }
  }
  return out;
}

std::vector<std::vector<Complex>> gate_matrix(const Gate& gate) {
  const bool two_qubit = gate.kind == GateKind::kCnot || gate.kind == GateKind::kCrz ||
                         gate.kind == GateKind::kSwap;
  const int n = two_qubit ? 2 : 1;
  Gate local = gate;
  if (two_qubit) {
    local.control = 0;
    local.target = 1;
  } else {
    local.target = 0;
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::vector<Complex>> m(dim, std::vector<Complex>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    auto s = StateVector::basis(n, col);
    apply_gate(s, local);
    for (std::size_t row = 0; row < dim; ++row) m[row][col] = s[row];
  }
  return m;
}

void accumulate_pauli_term(const PauliTerm& term, std::span<const Complex> in,
                           std::span<Complex> out) {
  const auto m = masks_of(term.ops);
  static constexpr std::array<Complex, 4> kIPow = {Complex{1, 0}, Complex{0, 1},
                                                   Complex{-1, 0}, Complex{0, -1}};
  const Complex c = term.coefficient * kIPow[m.n_y % 4];
  const std::uint64_t dim = in.size();
  if (m.z_mask == 0) {
    for (std::uint64_t b = 0; b < dim; ++b) out[b ^ m.x_mask] += c * in[b];
    return;
  }
  for (std::uint64_t b = 0; b < dim; ++b) {
    const Complex v = c * in[b];
    if (std::popcount(b & m.z_mask) & 1) {
      out[b ^ m.x_mask] -= v;
    } else {
      out[b ^ m.x_mask] += v;
    }
  }
}

StateVector apply_pauli_sum(const PauliSum& op, const StateVector& state) {
  if (op.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("operator acts on " + std::to_string(op.n_qubits()) +
                                " qubits, state has " + std::to_string(state.n_qubits()));
  }
  StateVector out(state.n_qubits(), std::vector<Complex>(state.dim()));
  for (const auto& t : op.terms()) accumulate_pauli_term(t, state.amplitudes(), out.amplitudes());
  return out;
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.n_qubits() != ket.n_qubits()) {
    throw std::invalid_argument("inner product of states with different qubit counts");
  }
  Complex acc{};
  for (std::size_t k = 0; k < bra.dim(); ++k) acc += std::conj(bra[k]) * ket[k];
  return acc;
}

Complex matrix_element(const StateVector& bra, const PauliSum* op, const StateVector& ket) {
  if (op == nullptr) return inner_product(bra, ket);
  return inner_product(bra, apply_pauli_sum(*op, ket));
}

Complex expectation(const StateVector& state, const PauliSum& op) {
  return matrix_element(state, &op, state);
}

std::vector<Complex> dense_matrix(const PauliSum& op) {
  const int n = op.n_qubits();
  if (n > 14) throw std::invalid_argument("dense matrix limited to 14 qubits");
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<Complex> m(dim * dim);
  for (const auto& t : op.terms()) {
    const auto mk = masks_of(t.ops);
    static constexpr std::array<Complex, 4> kIPow = {Complex{1, 0}, Complex{0, 1},
                                                     Complex{-1, 0}, Complex{0, -1}};
    const Complex c = t.coefficient * kIPow[mk.n_y % 4];
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(b & mk.z_mask) & 1) ? -1.0 : 1.0;
      m[(b ^ mk.x_mask) * dim + b] += sign * c;
    }
  }
  return m;
}

namespace {

template <typename T>
T to_little_endian(T value) {
  if constexpr (std::endian::native == std::endian::little) {
    return value;
  } else {
    std::array<unsigned char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    std::reverse(bytes.begin(), bytes.end());
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
  }
}

}  // namespace

void write_amplitudes(const StateVector& state, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  const std::uint64_t n = to_little_endian(static_cast<std::uint64_t>(state.n_qubits()));
  f.write(reinterpret_cast<const char*>(&n), sizeof n);
  for (const auto& a : state.amplitudes()) {
    const double parts[2] = {to_little_endian(a.real()), to_little_endian(a.imag())};
    f.write(reinterpret_cast<const char*>(parts), sizeof parts);
  }
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

StateVector read_amplitudes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::uint64_t n = 0;
  f.read(reinterpret_cast<char*>(&n), sizeof n);
  n = to_little_endian(n);
  if (!f || n > kMaxQubits) throw std::runtime_error(path + ": bad qubit count header");
  std::vector<Complex> amps(std::size_t{1} << n);
  for (auto& a : amps) {
    double parts[2];
    f.read(reinterpret_cast<char*>(parts), sizeof parts);
    a = {to_little_endian(parts[0]), to_little_endian(parts[1])};
  }
  if (!f) throw std::runtime_error(path + ": truncated amplitude data");
  return StateVector(static_cast<int>(n), std::move(amps));
}

}  // namespace gutzlcu
