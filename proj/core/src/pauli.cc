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

#include "gutzlcu/pauli.h"

#include <algorithm>

namespace gutzlcu {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::kI: return 'I';
    case Pauli::kX: return 'X';
    case Pauli::kY: return 'Y';
    case Pauli::kZ: return 'Z';
  }
  return '?';
}

PauliTerm PauliTerm::from_string(Complex coefficient, const std::string& ops) {
  PauliTerm term;
  term.coefficient = coefficient;
  term.ops.reserve(ops.size());
  for (char c : ops) {
    switch (c) {
      case 'I': case '_': term.ops.push_back(Pauli::kI); break;
      case 'X': term.ops.push_back(Pauli::kX); break;
      case 'Y': term.ops.push_back(Pauli::kY); break;
      case 'Z': term.ops.push_back(Pauli::kZ); break;
      default:
        throw std::invalid_argument(std::string("bad Pauli symbol '") + c + "'");
    }
  }
  return term;
}

std::string PauliTerm::op_string() const {
  std::string out;
  out.reserve(ops.size());
  for (Pauli p : ops) out.push_back(to_char(p));
  return out;
}

PauliMasks masks_of(const std::vector<Pauli>& ops) {
  if (ops.size() > 63) throw std::invalid_argument("Pauli string longer than 63 qubits");
  PauliMasks m;
  const int n = static_cast<int>(ops.size());
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    switch (ops[q]) {
      case Pauli::kI: break;
      case Pauli::kX: m.x_mask |= bit; break;
      case Pauli::kY: m.x_mask |= bit; m.z_mask |= bit; ++m.n_y; break;
      case Pauli::kZ: m.z_mask |= bit; break;
    }
  }
  return m;
}

void PauliSum::add(const PauliTerm& term) {
  if (terms_.empty() && n_qubits_ == 0) n_qubits_ = term.n_qubits();
  if (term.n_qubits() != n_qubits_) {
    throw std::invalid_argument("Pauli term has " + std::to_string(term.n_qubits()) +
                                " qubits, sum has " + std::to_string(n_qubits_));
  }
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const PauliTerm& t) { return t.ops == term.ops; });
  if (it == terms_.end()) {
    if (term.coefficient != Complex{0.0, 0.0}) terms_.push_back(term);
    return;
  }
  it->coefficient += term.coefficient;
  if (std::abs(it->coefficient) == 0.0) terms_.erase(it);
}

void PauliSum::add(Complex coefficient, const std::string& ops) {
  add(PauliTerm::from_string(coefficient, ops));
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& t : other.terms_) add(t);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

Complex PauliSum::coefficient(const std::string& ops) const {
  const auto key = PauliTerm::from_string(1.0, ops).ops;
  for (const auto& t : terms_) {
    if (t.ops == key) return t.coefficient;
  }
  return {0.0, 0.0};
}

PauliSum PauliSum::identity(int n_qubits, Complex coefficient) {
  PauliSum s(n_qubits);
  s.add(coefficient, std::string(n_qubits, 'I'));
  return s;
}

PauliSum operator+(PauliSum a, const PauliSum& b) {
  a += b;
  return a;
}

PauliSum operator*(Complex scale, PauliSum a) {
  a *= scale;
  return a;
}

namespace {

// Single-qubit product p * q = phase * r.
std::pair<Complex, Pauli> multiply_single(Pauli p, Pauli q) {
  const Complex i{0.0, 1.0};
  if (p == Pauli::kI) return {1.0, q};
  if (q == Pauli::kI) return {1.0, p};
  if (p == q) return {1.0, Pauli::kI};
  // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
  const int a = static_cast<int>(p);
  const int b = static_cast<int>(q);
  const int c = 6 - a - b;
  const bool cyclic = (b - a + 3) % 3 == 1;
  return {cyclic ? i : -i, static_cast<Pauli>(c)};
}

}  // namespace

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("qubit count mismatch");
  PauliSum out(a.n_qubits());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      PauliTerm t;
      t.coefficient = ta.coefficient * tb.coefficient;
      t.ops.resize(ta.ops.size());
      for (std::size_t k = 0; k < ta.ops.size(); ++k) {
        auto [phase, r] = multiply_single(ta.ops[k], tb.ops[k]);
        t.coefficient *= phase;
        t.ops[k] = r;
      }
      out.add(t);
    }
  }
  return out;
}

}  // namespace gutzlcu
