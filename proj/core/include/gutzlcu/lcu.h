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

#include <cmath>
#include <span>
#include <vector>

#include "gutzlcu/gutzwiller.h"
#include "gutzlcu/lattice.h"
#include "gutzlcu/slater.h"
#include "gutzlcu/statevector.h"

namespace gutzlcu {

/// How each ancilla's pair of opposite-conditioned rotations is realized.
enum class LcuVariant {
  /// Anti-controlled R_Z(-alpha) pair plus controlled R_Z(+alpha) pair.
  kControlledPair,
  /// Uncontrolled R_Z(-alpha) pair plus controlled R_Z(2 alpha) pair.
  kSimplified,
};

/// Whole-register layout: ancilla i is qubit i, register qubit q is qubit
/// n_sites + q. The ancilla |0...0> branch is therefore the leading
/// contiguous block of 4^n_sites amplitudes.
struct LcuLayout {
  int n_sites = 0;
  int n_qubits() const { return 3 * n_sites; }
  int ancilla(int site) const { return site; }
  int reg(int register_qubit) const { return n_sites + register_qubit; }
};

/// H on every ancilla, the conditioned exp(+-2 i alpha eta^z_i) rotations,
/// then H on every ancilla again.
Circuit lcu_circuit(int n_sites, const HSParams& params,
                    LcuVariant variant = LcuVariant::kSimplified);

/// |0...0>_anc (x) trial, evolved through lcu_circuit.
StateVector build_lcu_state(const StateVector& trial, double g,
                            LcuVariant variant = LcuVariant::kSimplified);

struct LcuOutcome {
  double success_probability = 0.0;
  StateVector projected_state;  // register qubits only, normalized
};

/// Projects the ancillas onto |0...0>. Throws std::domain_error when the
/// branch amplitude is below 1e-300.
LcuOutcome measure_ancillas_success(const StateVector& whole_state, int n_sites);

/// Success probability from inner products alone,
/// p = exp(-g n_sites / 2) <psi0| exp(-2 g D) |psi0>, for a spin-separable
/// Slater trial.
class SuccessProbability {
 public:
  /// Trial is the half-filled ground state of the hopping term.
  explicit SuccessProbability(const Lattice& lattice);
  SuccessProbability(const SlaterState& up, const SlaterState& down);

  int n_sites() const { return n_sites_; }
  double log_p(double g) const;
  double p(double g) const { return std::exp(log_p(g)); }
  /// <D>_g from the same amplitudes (analytic, no differencing).
  double interaction(double g) const;

 private:
  int n_sites_;
  // Distribution of the D eigenvalue over |psi0|^2: D = (n - 2 k) / 4 with k
  // the number of singly occupied sites.
  std::vector<double> weight_by_singles_;
};

struct SuccessRow {
  int n_sites;
  double g;
  double p;
  double log_p;
};

std::vector<SuccessRow> success_probability_curve(const Lattice& lattice,
                                                  std::span<const double> g_grid);

/// <D>_g recovered from the logarithmic derivative of the success
/// probability: -(n_sites/4 + (1/2) d ln p / dg), centered difference.
double docc_from_success_probability(const Lattice& lattice, double g,
                                     double delta = 1e-4);

}  // namespace gutzlcu
