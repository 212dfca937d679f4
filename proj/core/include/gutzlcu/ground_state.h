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
#include <optional>
#include <vector>

#include "gutzlcu/pauli.h"
#include "gutzlcu/statevector.h"

namespace gutzlcu {

/// Fixed (n_up, n_down) sector for a register laid out with every spin-up
/// qubit before the spin-down qubits.
struct ParticleSector {
  int n_up = 0;
  int n_down = 0;
};

struct GroundStateOptions {
  int krylov_dim = 40;
  int max_restarts = 200;
  double tolerance = 1e-10;  // relative residual ||Hv - Ev|| / |E|
  double degeneracy_gap = 1e-8;
  int max_degeneracy_probe = 4;
  std::uint64_t seed = 0x5eed;
};

struct GroundStateResult {
  double energy = 0.0;
  StateVector state;
  /// Number of eigenvalues within degeneracy_gap of the lowest one.
  int degeneracy = 1;
  double residual = 0.0;
  int iterations = 0;
};

/// Lowest eigenpair of a Hermitian Pauli sum by restarted Lanczos with full
/// reorthogonalization. With a sector the Krylov vectors live on the sector
/// basis only, which keeps every iterate exactly inside it.
GroundStateResult exact_ground_state(
    const PauliSum& hamiltonian, int n_qubits,
    std::optional<ParticleSector> sector = std::nullopt,
    const GroundStateOptions& options = {});

}  // namespace gutzlcu
