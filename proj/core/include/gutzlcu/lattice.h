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

#include <string>
#include <utility>
#include <vector>

#include "gutzlcu/common.h"
#include "gutzlcu/pauli.h"

namespace gutzlcu {

enum class LatticeKind { kChain, kLadder };

std::string to_string(LatticeKind kind);
LatticeKind parse_lattice_kind(const std::string& name);

/// Open-boundary lattice. Sites are 0-based internally; edges satisfy i < j.
struct Lattice {
  LatticeKind kind = LatticeKind::kChain;
  int n_sites = 0;
  std::vector<std::pair<int, int>> edges;
  /// +1 / -1 per site, a proper 2-coloring of the edge graph.
  std::vector<int> sublattice;
};

/// Chain: edges (i, i+1). Ladder: two legs of n_sites/2 sites numbered as a
/// snake (leg A left to right, leg B right to left) plus the rungs.
Lattice build_lattice(LatticeKind kind, int n_sites);

/// Parses "chain:N" or "ladder:N".
Lattice parse_lattice(const std::string& spec);

/// Throws std::invalid_argument if the lattice violates an invariant.
void validate(const Lattice& lattice);

/// Single-particle hopping matrix: -J on every edge, zero elsewhere.
std::vector<std::vector<double>> hopping_matrix(const Lattice& lattice,
                                                double J);

/// Maps (site, spin) onto a qubit: every spin-up qubit first, then spin down.
class QubitLayout {
 public:
  explicit QubitLayout(int n_sites);

  int n_sites() const { return n_sites_; }
  int n_qubits() const { return 2 * n_sites_; }
  int qubit(int site, Spin spin) const;
  std::pair<int, Spin> site_of(int qubit) const;

 private:
  int n_sites_;
};

struct HubbardTerms {
  PauliSum kinetic;      // K
  PauliSum interaction;  // D, without the U prefactor
};

/// Jordan-Wigner images of the hopping term K and the interaction
/// D = sum_i (n_up - 1/2)(n_down - 1/2) = 1/4 sum_i Z_up Z_down.
HubbardTerms hubbard_terms(const Lattice& lattice, double J, double U);

/// (I - Z_q) / 2 on the qubit holding (site, spin).
PauliSum number_operator_term(const QubitLayout& layout, int site, Spin spin);

/// JSON description {"kind", "n_sites", "J", "U", "edges"}.
std::string model_to_json(const Lattice& lattice, double J, double U);
/// Inverse of model_to_json; the edge list is checked against the kind.
Lattice lattice_from_json(const std::string& json, double* J = nullptr,
                          double* U = nullptr);

}  // namespace gutzlcu
