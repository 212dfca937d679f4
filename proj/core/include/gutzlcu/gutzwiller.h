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
#include <vector>

#include "gutzlcu/lattice.h"
#include "gutzlcu/pauli.h"
#include "gutzlcu/slater.h"
#include "gutzlcu/statevector.h"

namespace gutzlcu {

/// Parameters of the discrete Hubbard-Stratonovich decoupling
/// exp(-g (n_up - 1/2)(n_dn - 1/2)) = gamma sum_{s=+-1} exp(i alpha s (n_up + n_dn - 1)).
struct HSParams {
  double g = 0.0;
  double alpha = 0.0;  // arccos(exp(-g/2))
  double gamma = 0.5;  // exp(g/4)/2
};

HSParams hs_params(double g);

/// Largest elementwise gap between the two sides of the decoupling identity,
/// both built as 4x4 matrices on |n_up n_dn> = |00>, |01>, |10>, |11>.
double verify_hs_identity(double g);

/// Auxiliary fields s_{i,tau} = +-1 for sites i and tau in {1, 2}. tau = 1
/// dresses the ket and tau = 2 the bra.
class AuxFieldConfig {
 public:
  AuxFieldConfig() = default;
  /// All fields +1.
  explicit AuxFieldConfig(int n_sites);

  /// Bit (tau - 1) * n_sites + i of `index` set means s_{i,tau} = -1.
  static AuxFieldConfig from_index(int n_sites, std::uint64_t index);
  std::uint64_t index() const;

  int n_sites() const { return n_sites_; }
  int operator()(int site, int tau) const { return s_[slot(site, tau)]; }
  void set(int site, int tau, int value);
  void flip(int site, int tau) { s_[slot(site, tau)] = -s_[slot(site, tau)]; }

  /// Same configuration with every field negated.
  AuxFieldConfig negated() const;

  friend bool operator==(const AuxFieldConfig&, const AuxFieldConfig&) = default;

 private:
  std::size_t slot(int site, int tau) const;

  int n_sites_ = 0;
  std::vector<int> s_;
};

/// u_{s_tau} = prod_i exp(i alpha s_{i,tau} (n_i - 1/2)) on one spin sector.
FieldPhases field_phases(const AuxFieldConfig& config, int tau, double alpha);

/// R_Z(s_{i,tau} alpha) on qubits i_up and i_down for every site. The product
/// equals exp(2 i alpha s eta^z_i) exactly; no global phase is dropped.
Circuit field_rotation_circuit(const AuxFieldConfig& config, int tau,
                               const HSParams& params,
                               const QubitLayout& layout);

/// Diagonal of a Z-only Pauli sum on the computational basis.
std::vector<double> diagonal_of(const PauliSum& diagonal_op);

/// Multiplies each amplitude by exp(-g d(b)), d(b) the eigenvalue of D on b.
/// The result is not renormalized.
StateVector apply_gutzwiller_exact(const StateVector& state, double g,
                                   const PauliSum& interaction);

/// Original Gutzwiller factor: amplitude times g_tilde^{#doubly occupied}.
StateVector apply_gutzwiller_projector(const StateVector& state,
                                       double g_tilde,
                                       const QubitLayout& layout);

struct GutzwillerObservables {
  double norm_squared = 0.0;  // <psi0| exp(-2gD) |psi0>
  double kinetic = 0.0;       // <K>_g
  double interaction = 0.0;   // <D>_g
};

/// <K> and <D> in the normalized exp(-gD)|psi0> via the statevector.
GutzwillerObservables exact_gutzwiller_observables(const StateVector& trial,
                                                   double g,
                                                   const HubbardTerms& terms);

/// Largest lattice the 4^N configuration enumeration accepts.
inline constexpr int kMaxEnumerationSites = 7;

/// <O>_g as the explicit double sum over all 4^N field configurations,
/// numerator and denominator each reduced by pairwise summation in
/// configuration order.
double full_sum_expectation(const PauliSum& observable, double g,
                            const StateVector& trial,
                            const QubitLayout& layout);

/// Pairwise (tree) summation in index order.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

struct TwoSiteCurves {
  double J = 1.0;
  double U = 0.0;
  std::vector<double> g;
  std::vector<double> energy;
  std::vector<double> kinetic;
  std::vector<double> potential;  // U <D>
  double g_opt = 0.0;
  double energy_opt = 0.0;
};

/// Closed-form two-site half-filled curves:
/// E(g) = -(2J + (U/2) sinh g) / cosh g, sinh g_opt = U / 4J,
/// E(g_opt) = -sqrt(4J^2 + U^2/4).
TwoSiteCurves two_site_curves(double J, double U,
                              std::span<const double> g_grid);

/// 0, step, ..., g_max with endpoints snapped to avoid drift.
std::vector<double> make_grid(double g_min, double g_max, double step);

}  // namespace gutzlcu
