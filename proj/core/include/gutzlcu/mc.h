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
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gutzlcu/gutzwiller.h"
#include "gutzlcu/lattice.h"
#include "gutzlcu/pauli.h"
#include "gutzlcu/slater.h"
#include "gutzlcu/statevector.h"

namespace gutzlcu {

enum class Backend { kStatevector, kDeterminant };

std::string to_string(Backend backend);
Backend parse_backend(const std::string& name);

/// Generator used by every sampler; recorded in run metadata.
using McRng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

/// SplitMix64 finalizer, used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

struct McParams {
  int n_sweeps = 20000;  // measurement sweeps, summed over chains
  int n_burnin = -1;     // < 0: max(n_sweeps / 10, 500)
  int n_bins = 20;
  int n_chains = 1;
  std::uint64_t seed = 1;
  Backend backend = Backend::kDeterminant;

  int burnin() const;
  /// Throws std::invalid_argument unless n_bins >= 10 and both n_sweeps and
  /// n_bins split evenly across chains and bins.
  void validate() const;
};

struct EstimatorResult {
  std::string name;
  double mean = 0.0;
  double stderr_ = 0.0;
  long n_samples = 0;
  double acceptance_rate = 0.0;
};

/// Spin-separable trial |phi_up> (x) |phi_down>.
struct Trial {
  SlaterState up;
  SlaterState down;
};

/// Half-filled ground state of the hopping term in both spin sectors.
Trial half_filled_trial(const Lattice& lattice);

/// Observables the local estimator understands.
struct Observable {
  enum class Kind { kKinetic, kInteraction, kPauliProduct };
  Kind kind = Kind::kKinetic;
  PauliTerm product;  // kPauliProduct only; spans both spin blocks
  std::string name;

  static Observable kinetic() { return {Kind::kKinetic, {}, "K"}; }
  static Observable interaction() { return {Kind::kInteraction, {}, "D"}; }
  static Observable pauli(const PauliTerm& term);
};

/// Everything a weight or estimator evaluation needs for one (lattice, J, g).
class FieldModel {
 public:
  /// The statevector image of the trial is built only when n_sites <= 10.
  FieldModel(const Lattice& lattice, double J, Trial trial, double g);

  const Lattice& lattice() const { return lattice_; }
  int n_sites() const { return lattice_.n_sites; }
  double J() const { return J_; }
  const HSParams& params() const { return params_; }
  const Trial& trial() const { return trial_; }
  const QubitLayout& layout() const { return layout_; }
  const HubbardTerms& terms() const { return terms_; }
  const Eigen::MatrixXcd& hopping() const { return hopping_; }
  bool has_statevector() const { return psi0_.has_value(); }
  /// Throws std::logic_error when the statevector was not built.
  const StateVector& psi0() const;

  /// Combined bra and ket field operator on one spin sector.
  FieldPhases sector_phases(const AuxFieldConfig& config) const;

 private:
  Lattice lattice_;
  double J_;
  HSParams params_;
  Trial trial_;
  QubitLayout layout_;
  HubbardTerms terms_;
  Eigen::MatrixXcd hopping_;
  std::optional<StateVector> psi0_;
};

/// <psi0| prod_i exp(2 i alpha s_{i,2} eta_i) prod_j exp(2 i alpha s_{j,1} eta_j) |psi0>.
Complex weight_numerator(const AuxFieldConfig& config, const FieldModel& model,
                         Backend backend);

/// <O>_s: the dressed matrix element of O over the dressed overlap. The
/// determinant backend supports K, D and Pauli products that factor into
/// per-spin Z strings and single hops X Z..Z X or Y Z..Z Y; anything else
/// throws std::invalid_argument. Throws SingularOverlapError for
/// near-singular overlaps.
Complex local_estimator(const AuxFieldConfig& config, const Observable& observable,
                        const FieldModel& model, Backend backend);

/// <K>_s and <D>_s from one Green's function evaluation per spin.
struct LocalEnergy {
  Complex kinetic;
  Complex interaction;
};
LocalEnergy local_energy(const AuxFieldConfig& config, const FieldModel& model,
                         Backend backend);

/// Weights real within this absolute tolerance count as real.
inline constexpr double kWeightImagTolerance = 1e-10;
inline constexpr double kWeightNegTolerance = 1e-12;

/// Real part of a weight; throws PhaseProblemError outside the tolerances.
double checked_weight(Complex w);

/// Metropolis acceptance min(1, w_new / w_old); a zero old weight accepts
/// any positive new weight.
double acceptance_probability(double w_old, double w_new);

struct ChainState {
  AuxFieldConfig config;
  Complex weight;
  Complex overlap_up;
  Complex overlap_down;
};

/// Chain at the all +1 configuration with its weight cached.
ChainState init_chain(const FieldModel& model, Backend backend);

struct SweepStats {
  int proposals = 0;
  int accepted = 0;
  int singular = 0;  // proposals rejected for an ill-conditioned overlap
};

/// One sweep of single-field flip proposals over sites i and then tau = 1, 2
/// within each site. A uniform variate is drawn for every proposal.
SweepStats metropolis_sweep(ChainState& chain, const FieldModel& model,
                            Backend backend, McRng& rng);

/// Relative gap between the cached and a freshly computed weight.
double cached_weight_drift(const ChainState& chain, const FieldModel& model,
                           Backend backend);

struct McRun {
  EstimatorResult energy;
  EstimatorResult kinetic;
  EstimatorResult potential;  // U <D>
  double acceptance_rate = 0.0;
  int burnin = 0;
  long singular_rejections = 0;
  /// Energy difference between the first and second half of the
  /// measurements, in units of its combined error.
  double half_split_sigma = 0.0;
};

/// Importance sampling of E = <K> + U <D> at fixed g. Combines bins from all
/// chains; E is assembled per bin.
McRun run_mc(const Lattice& lattice, double J, double U, double g,
             const McParams& params);
McRun run_mc(const FieldModel& model, double U, const McParams& params);
/// One set of chains serves every U: the sampled distribution does not
/// depend on U.
std::vector<McRun> run_mc(const FieldModel& model, std::span<const double> U_values,
                          const McParams& params);

/// Bin means to (mean, standard error of the mean).
std::pair<double, double> bin_statistics(const std::vector<double>& bin_means);

/// Every weight numerator over the 4^N configurations, by config index.
std::vector<Complex> enumerate_weights(const FieldModel& model, Backend backend);

/// Visit counts per config index over n_sweeps sweeps (after burn-in).
std::vector<long> sample_config_histogram(const FieldModel& model, int n_sweeps,
                                          int n_burnin, std::uint64_t seed);

struct PhaseReport {
  int n_configs = 0;
  double max_abs_imag = 0.0;
  double min_real = 0.0;
  bool pass = false;
};

inline constexpr int kMaxPhaseCheckSites = 5;

/// Exhaustive check that every weight is real and nonnegative.
PhaseReport phase_problem_check(const FieldModel& model,
                                Backend backend = Backend::kDeterminant);

}  // namespace gutzlcu
