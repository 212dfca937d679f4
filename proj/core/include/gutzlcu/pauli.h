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
#include <string>
#include <vector>

#include "gutzlcu/common.h"

namespace gutzlcu {

enum class Pauli : std::uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

char to_char(Pauli p);

/// coefficient * P_0 P_1 ... P_{n-1}; operator k acts on qubit k, qubit 0
/// being the most significant bit of a computational-basis index.
struct PauliTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<Pauli> ops;

  int n_qubits() const { return static_cast<int>(ops.size()); }
  /// Parses e.g. "XIZY".
  static PauliTerm from_string(Complex coefficient, const std::string& ops);
  std::string op_string() const;
};

/// Bit masks of a Pauli string for the basis-index convention above.
/// P|b> = phase(b) |b ^ x_mask>, phase(b) = i^{n_y} (-1)^{popcount(b & z_mask)}.
struct PauliMasks {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  int n_y = 0;
};

PauliMasks masks_of(const std::vector<Pauli>& ops);

/// Sum of Pauli terms on a fixed qubit count, merged so that every operator
/// string appears once. Terms whose merged coefficient vanishes are dropped.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PauliTerm& term);
  void add(Complex coefficient, const std::string& ops);
  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  /// Coefficient of an operator string, zero if absent.
  Complex coefficient(const std::string& ops) const;

  static PauliSum identity(int n_qubits, Complex coefficient = 1.0);

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator*(Complex scale, PauliSum a);

/// Product of two Pauli sums on the same qubits, merged.
PauliSum multiply(const PauliSum& a, const PauliSum& b);

}  // namespace gutzlcu
