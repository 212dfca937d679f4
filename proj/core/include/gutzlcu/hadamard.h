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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gutzlcu/gutzwiller.h"
#include "gutzlcu/pauli.h"
#include "gutzlcu/statevector.h"

namespace gutzlcu {

/// <phi| u_{s_2} O u_{s_1} |phi> on one spin sector, where
/// u_{s_tau} = prod_i R_Z(alpha s_{i,tau}) and O is a Pauli string (all I
/// for the identity).
Complex hadamard_exact(const AuxFieldConfig& config, const std::vector<Pauli>& ops,
                       const StateVector& trial_sector, double alpha);

/// Probability of reading the Hadamard-test ancilla as 0, simulated as the
/// full circuit: H, controlled u_{s_1}, controlled O, controlled u_{s_2},
/// optionally S-dagger, H. The ancilla is qubit 0.
double hadamard_test_p0(const AuxFieldConfig& config, const std::vector<Pauli>& ops,
                        const StateVector& trial_sector, double alpha, bool imaginary_part);

struct HadamardEstimate {
  double real_part = 0.0;
  double imag_part = 0.0;
  long shots = 0;  // per part
  double real_stderr = 0.0;
  double imag_stderr = 0.0;

  Complex value() const { return {real_part, imag_part}; }
};

/// Binomial shot sampling of the ancilla for a known exact expectation value.
HadamardEstimate hadamard_shots_from_value(Complex exact, long shots, std::mt19937_64& rng);

HadamardEstimate hadamard_shots(const AuxFieldConfig& config, const std::vector<Pauli>& ops,
                                const StateVector& trial_sector, double alpha, long shots,
                                std::mt19937_64& rng);

/// The three two-site circuit families.
enum class Family : int { kII = 0, kZI = 1, kXX = 2 };

std::string to_string(Family family);
std::vector<Pauli> family_ops(Family family);

/// Synthetic stand-in for device error: each family multiplies its exact
/// value by scale * exp(i (phase + phase_drift * alpha)).
struct BiasModel {
  std::array<double, 3> scale{1.0, 1.0, 1.0};
  std::array<double, 3> phase{0.0, 0.0, 0.0};
  double phase_drift = 0.0;

  /// Deeper circuits lose more: family k (II, ZI, XX) gets c^(k+1).
  static BiasModel depth_scaled(double c, double phase = 0.0, double phase_drift = 0.0);
  void validate() const;
  Complex apply(Family family, double alpha, Complex exact) const;
};

/// Phase-and-scale factor ideal / raw. Throws std::domain_error when
/// |raw| < 1e-6 or the ideal value is zero.
Complex pas_factor(Complex reference_raw, Complex reference_ideal);

/// Each raw value times reference_ideal / reference_raw.
std::vector<Complex> pas_correct(const std::vector<Complex>& raw, Complex reference_raw,
                                 Complex reference_ideal);

/// Anchors: II and XX at g = 0 (ideal 1), ZI at g = 10 against alpha = pi/2.
inline constexpr double kPasStrongCouplingG = 10.0;

struct TwoSiteQuantities {
  double denominator = 0.0;   // <psi0| exp(-2gD) |psi0>
  double zz_numerator = 0.0;  // <psi0| exp(-gD) Z_1up Z_1dn exp(-gD) |psi0>
  double xx_numerator = 0.0;  // <psi0| exp(-gD) X_1up X_2up exp(-gD) |psi0>
  double energy = 0.0;
  double kinetic = 0.0;
  double potential = 0.0;  // U <D>
};

/// Per-quantity mean and spread over repetitions.
struct TwoSiteStats {
  TwoSiteQuantities mean;
  TwoSiteQuantities err;
};

struct ShotOptions {
  long shots = 8192;  // 0: exact primitives only
  int reps = 16;
  std::optional<BiasModel> bias;
  bool pas = true;
  std::uint64_t seed = 1;
};

struct TwoSitePoint {
  double g = 0.0;
  TwoSiteQuantities exact;
  std::optional<TwoSiteStats> raw;
  std::optional<TwoSiteStats> corrected;  // only with a bias model and pas
};

/// Two-site half-filled energies assembled from the 16 field configurations
/// per spin sector, using spin-sector symmetry. Errors are the standard
/// deviation over repetitions.
TwoSitePoint two_site_energy_from_primitives(double g, double J, double U,
                                             const ShotOptions& options);

/// Exact-primitive assembly only.
TwoSiteQuantities two_site_exact_primitives(double g, double J, double U);

}  // namespace gutzlcu
