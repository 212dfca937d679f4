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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gutzlcu/common.h"
#include "gutzlcu/lattice.h"
#include "gutzlcu/statevector.h"

namespace gutzlcu {

/// Occupied orbitals of one spin sector: phi is n_sites x n_particles with
/// orthonormal columns.
struct SlaterState {
  Eigen::MatrixXcd phi;

  int n_sites() const { return static_cast<int>(phi.rows()); }
  int n_particles() const { return static_cast<int>(phi.cols()); }
};

/// Eigenvalues (ascending) and eigenvectors of the hopping matrix.
struct SingleParticleSpectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXd orbitals;
};

SingleParticleSpectrum single_particle_spectrum(const Lattice& lattice,
                                                double J = 1.0);

/// Fills the n lowest hopping orbitals. Each orbital is phase-fixed so that
/// its largest-magnitude component is real positive. Throws
/// DegenerateFillingError when the Fermi-level gap is below 1e-8.
SlaterState ground_state_of_K(const Lattice& lattice, int n_particles);

/// Per-site diagonal unitary plus a separate scalar:
/// U = scalar * diag(diag). Used for the field operators
/// u_s = prod_i exp(i alpha s_i (n_i - 1/2)), where the -1/2 shifts are
/// collected into `scalar` so that det() only ever sees unit-modulus phases.
struct FieldPhases {
  std::vector<Complex> diag;
  Complex scalar{1.0, 0.0};

  /// Product of two commuting diagonal operators.
  friend FieldPhases operator*(const FieldPhases& a, const FieldPhases& b);
  FieldPhases adjoint() const;
  static FieldPhases identity(int n_sites);
};

struct DressedOverlap {
  Complex value;
  double log_magnitude = 0.0;
  /// Reciprocal condition-number estimate of phi^dagger diag phi (L1 norm).
  double rcond = 1.0;
};

/// <phi| U |phi> for a diagonal U = scalar * diag(phases).
DressedOverlap dressed_overlap(const SlaterState& slater,
                               const FieldPhases& phases);

/// Largest overlap-matrix condition number accepted by the Green's function.
inline constexpr double kMaxOverlapCondition = 1e12;

/// Dressed equal-time Green's function G(a, b) = <L| c_a^dagger c_b |R> /
/// <L|R> for <L| = <phi| U_bra and |R> = U_ket |phi>.
Eigen::MatrixXcd dressed_green(const SlaterState& slater,
                               const FieldPhases& bra, const FieldPhases& ket);

/// <phi| U_bra O U_ket |phi> / <phi| U_bra U_ket |phi> for a one-body
/// O = sum_ab one_body(a, b) c_a^dagger c_b. Throws SingularOverlapError when
/// the overlap matrix condition estimate exceeds kMaxOverlapCondition.
Complex dressed_one_body(const SlaterState& slater, const FieldPhases& bra,
                         const FieldPhases& ket,
                         const Eigen::MatrixXcd& one_body);

/// Nonzero amplitudes of one spin sector, keyed by an occupation mask whose
/// bit (n_sites - 1 - i) marks site i.
struct SectorAmplitudes {
  int n_sites = 0;
  std::vector<std::pair<std::uint64_t, Complex>> entries;
};

/// Amplitudes <b|phi> as row-selected minors of phi. Basis states follow the
/// Jordan-Wigner ordering c_{r1}^dag c_{r2}^dag ... |vac> with r1 < r2 < ...
SectorAmplitudes sector_amplitudes(const SlaterState& slater);

/// Full 2 n_sites-qubit statevector of |phi_up> (x) |phi_down>, normalized.
StateVector slater_to_statevector(const SlaterState& up,
                                  const SlaterState& down,
                                  const QubitLayout& layout);

/// Single spin sector on n_sites qubits.
StateVector sector_to_statevector(const SlaterState& slater);

}  // namespace gutzlcu
