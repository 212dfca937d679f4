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

#include "gutzlcu/hadamard.h"

#include <bit>
#include <cmath>
#include <numbers>

#include "gutzlcu/mc.h"
#include "gutzlcu/slater.h"

namespace gutzlcu {
namespace {

void check_sector(const AuxFieldConfig& config, const std::vector<Pauli>& ops,
                  const StateVector& trial) {
  if (config.n_sites() != trial.n_qubits() || static_cast<int>(ops.size()) != trial.n_qubits()) {
    throw std::invalid_argument("config, Pauli string and trial sector disagree on size");
  }
}

void apply_field(StateVector& state, const AuxFieldConfig& config, int tau, double alpha,
                 int offset, int control) {
  for (int i = 0; i < config.n_sites(); ++i) {
    const double theta = alpha * config(i, tau);
    apply_gate(state, control < 0 ? Gate::rz(offset + i, theta)
                                  : Gate::crz(control, offset + i, theta));
  }
}

double sample_std(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  double m = 0.0;
  for (double x : v) m += x;
  m /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

constexpr int kConfigs = 16;  // 4 fields on two sites
constexpr std::array<Family, 3> kFamilies{Family::kII, Family::kZI, Family::kXX};

using Primitives = std::array<std::array<Complex, kConfigs>, 3>;

const StateVector& bell_sector() {
  static const StateVector bell =
      sector_to_statevector(ground_state_of_K(build_lattice(LatticeKind::kChain, 2), 1));
  return bell;
}

Primitives exact_primitives(double alpha) {
  Primitives p;
  for (Family f : kFamilies) {
    const auto ops = family_ops(f);
    for (int k = 0; k < kConfigs; ++k) {
      p[static_cast<std::size_t>(f)][static_cast<std::size_t>(k)] =
          hadamard_exact(AuxFieldConfig::from_index(2, static_cast<std::uint64_t>(k)), ops,
                         bell_sector(), alpha);
    }
  }
  return p;
}

TwoSiteQuantities assemble(const Primitives& p, double gamma, double J, double U) {
  const auto& ii = p[0];
  const auto& zi = p[1];
  const auto& xx = p[2];
  Complex den = 0.0;
  Complex zz = 0.0;
  Complex xn = 0.0;
  for (int k = 0; k < kConfigs; ++k) {
    // Both spin sectors see the same fields and the same trial.
    den += ii[static_cast<std::size_t>(k)] * ii[static_cast<std::size_t>(k)];
    zz += zi[static_cast<std::size_t>(k)] * zi[static_cast<std::size_t>(k)];
    xn += xx[static_cast<std::size_t>(k)] * ii[static_cast<std::size_t>(k)];
  }
  const double g4 = std::pow(gamma, 4);
  TwoSiteQuantities q;
  q.denominator = g4 * den.real();
  q.zz_numerator = g4 * zz.real();
  q.xx_numerator = g4 * xn.real();
  q.kinetic = -2.0 * J * q.xx_numerator / q.denominator;
  q.potential = U * 0.5 * q.zz_numerator / q.denominator;
  q.energy = q.kinetic + q.potential;
  return q;
}

std::uint64_t stream_seed(std::uint64_t seed, double g, int tag, int rep, int family, int config) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(g));
  const std::uint64_t key = (static_cast<std::uint64_t>(tag) << 48) |
                            (static_cast<std::uint64_t>(rep) << 32) |
                            (static_cast<std::uint64_t>(family) << 16) |
                            static_cast<std::uint64_t>(config);
  return splitmix64(h ^ key);
}

// One repetition of raw (possibly biased) shot estimates at a given g.
Primitives shot_primitives(double g, int tag, int rep, const ShotOptions& options) {
  const double alpha = hs_params(g).alpha;
  const auto exact = exact_primitives(alpha);
  Primitives out;
  for (Family f : kFamilies) {
    const auto fi = static_cast<std::size_t>(f);
    for (int k = 0; k < kConfigs; ++k) {
      Complex v = exact[fi][static_cast<std::size_t>(k)];
      if (options.bias) v = options.bias->apply(f, alpha, v);
      std::mt19937_64 rng(stream_seed(options.seed, g, tag, rep, static_cast<int>(f), k));
      out[fi][static_cast<std::size_t>(k)] = hadamard_shots_from_value(v, options.shots, rng).value();
    }
  }
  return out;
}

TwoSiteStats summarize(const std::vector<TwoSiteQuantities>& reps) {
  TwoSiteStats s;
  const std::array fields{&TwoSiteQuantities::denominator, &TwoSiteQuantities::zz_numerator,
                          &TwoSiteQuantities::xx_numerator, &TwoSiteQuantities::energy,
                          &TwoSiteQuantities::kinetic,      &TwoSiteQuantities::potential};
  std::vector<double> v;
  for (auto f : fields) {
    v.clear();
    for (const auto& q : reps) v.push_back(q.*f);
    double m = 0.0;
    for (double x : v) m += x;
    s.mean.*f = m / static_cast<double>(v.size());
    s.err.*f = sample_std(v);
  }
  return s;
}

}  // namespace

Complex hadamard_exact(const AuxFieldConfig& config, const std::vector<Pauli>& ops,
                       const StateVector& trial_sector, double alpha) {
  check_sector(config, ops, trial_sector);
  StateVector ket = trial_sector;
  apply_field(ket, config, 1, alpha, 0, -1);
  bool any = false;
  for (Pauli p : ops) any = any || p != Pauli::kI;
  if (any) {
    PauliSum op(trial_sector.n_qubits());
    op.add(PauliTerm{1.0, ops});
    ket = apply_pauli_sum(op, ket);
  }
  apply_field(ket, config, 2, alpha, 0, -1);
  return inner_product(trial_sector, ket);
}

double hadamard_test_p0(const AuxFieldConfig& config, const std::vector<Pauli>& ops,
                        const StateVector& trial_sector, double alpha, bool imaginary_part) {
  check_sector(config, ops, trial_sector);
  const int n = trial_sector.n_qubits();
  std::vector<Complex> amps(std::size_t{2} << n, 0.0);
  std::copy(trial_sector.amplitudes().begin(), trial_sector.amplitudes().end(), amps.begin());
  StateVector s(n + 1, std::move(amps));
  apply_gate(s, Gate::h(0));
  apply_field(s, config, 1, alpha, 1, 0);
  for (int i = 0; i < n; ++i) {
    const int q = 1 + i;
    switch (ops[static_cast<std::size_t>(i)]) {
      case Pauli::kI:
        break;
      case Pauli::kX:
        apply_gate(s, Gate::cnot(0, q));
        break;
      case Pauli::kZ:
        // controlled(-iZ), then S on the control restores controlled(Z)
        apply_gate(s, Gate::crz(0, q, std::numbers::pi));
        for (int k = 0; k < 3; ++k) apply_gate(s, Gate::sdg(0));
        break;
      case Pauli::kY:
        // controlled(-Y) from X(-iZ), then Z on the control
        apply_gate(s, Gate::crz(0, q, std::numbers::pi));
        apply_gate(s, Gate::cnot(0, q));
        apply_gate(s, Gate::sdg(0));
        apply_gate(s, Gate::sdg(0));
        break;
    }
  }
  apply_field(s, config, 2, alpha, 1, 0);
  if (imaginary_part) apply_gate(s, Gate::sdg(0));
  apply_gate(s, Gate::h(0));
  double p0 = 0.0;
  const std::size_t half = std::size_t{1} << n;
  for (std::size_t k = 0; k < half; ++k) p0 += std::norm(s[k]);
  return p0;
}

HadamardEstimate hadamard_shots_from_value(Complex exact, long shots, std::mt19937_64& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  auto estimate = [&](double expectation) {
    const double p0 = std::clamp((1.0 + expectation) / 2.0, 0.0, 1.0);
    std::binomial_distribution<long> draw(shots, p0);
    const long n0 = draw(rng);
    return (2.0 * static_cast<double>(n0) - static_cast<double>(shots)) /
           static_cast<double>(shots);
  };
  HadamardEstimate e;
  e.shots = shots;
  e.real_part = estimate(exact.real());
  e.imag_part = estimate(exact.imag());
  const auto n = static_cast<double>(shots);
  e.real_stderr = std::sqrt(std::max(0.0, 1.0 - e.real_part * e.real_part) / n);
  e.imag_stderr = std::sqrt(std::max(0.0, 1.0 - e.imag_part * e.imag_part) / n);
  return e;
}

HadamardEstimate hadamard_shots(const AuxFieldConfig& config, const std::vector<Pauli>& ops,
                                const StateVector& trial_sector, double alpha, long shots,
                                std::mt19937_64& rng) {
  return hadamard_shots_from_value(hadamard_exact(config, ops, trial_sector, alpha), shots, rng);
}

std::string to_string(Family family) {
  switch (family) {
    case Family::kII:
      return "II";
    case Family::kZI:
      return "ZI";
    case Family::kXX:
      return "XX";
  }
  return "?";
}

std::vector<Pauli> family_ops(Family family) {
  switch (family) {
    case Family::kII:
      return {Pauli::kI, Pauli::kI};
    case Family::kZI:
      return {Pauli::kZ, Pauli::kI};
    case Family::kXX:
      return {Pauli::kX, Pauli::kX};
  }
  return {};
}

BiasModel BiasModel::depth_scaled(double c, double phase, double phase_drift) {
  BiasModel b;
  b.scale = {c, c * c, c * c * c};
  b.phase = {phase, phase, phase};
  b.phase_drift = phase_drift;
  b.validate();
  return b;
}

void BiasModel::validate() const {
  for (double s : scale) {
    if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("bias scale must lie in (0, 1]");
  }
  for (double p : phase) {
    if (!std::isfinite(p)) throw std::invalid_argument("bias phase must be finite");
  }
  if (!std::isfinite(phase_drift)) throw std::invalid_argument("bias phase drift must be finite");
}

Complex BiasModel::apply(Family family, double alpha, Complex exact) const {
  const auto f = static_cast<std::size_t>(family);
  return scale[f] * std::polar(1.0, phase[f] + phase_drift * alpha) * exact;
}

Complex pas_factor(Complex reference_raw, Complex reference_ideal) {
  if (std::abs(reference_raw) < 1e-6) {
    throw std::domain_error("PaS reference below 1e-6; correction unreliable");
  }
  if (reference_ideal == Complex{0.0, 0.0}) throw std::domain_error("PaS ideal reference is zero");
  return reference_ideal / reference_raw;
}

std::vector<Complex> pas_correct(const std::vector<Complex>& raw, Complex reference_raw,
                                 Complex reference_ideal) {
  const Complex f = pas_factor(reference_raw, reference_ideal);
  std::vector<Complex> out;
  out.reserve(raw.size());
  for (const auto& v : raw) out.push_back(v * f);
  return out;
}

TwoSiteQuantities two_site_exact_primitives(double g, double J, double U) {
  const auto hs = hs_params(g);
  return assemble(exact_primitives(hs.alpha), hs.gamma, J, U);
}

TwoSitePoint two_site_energy_from_primitives(double g, double J, double U,
                                             const ShotOptions& options) {
  if (!(J > 0.0)) throw std::invalid_argument("J must be positive");
  if (options.bias) options.bias->validate();
  TwoSitePoint point;
  point.g = g;
  point.exact = two_site_exact_primitives(g, J, U);
  if (options.shots == 0) return point;
  if (options.reps < 2) throw std::invalid_argument("need at least two repetitions");

  const double gamma = hs_params(g).gamma;
  const bool correct = options.bias.has_value() && options.pas;
  const std::array<double, 3> anchor_g{0.0, kPasStrongCouplingG, 0.0};
  std::array<std::array<Complex, kConfigs>, 3> ideal{};
  for (Family f : kFamilies) {
    const auto fi = static_cast<std::size_t>(f);
    ideal[fi] = exact_primitives(hs_params(anchor_g[fi]).alpha)[fi];
  }
  // The strong-coupling ideal is the alpha = pi/2 limit, evaluated directly.
  ideal[1] = exact_primitives(std::numbers::pi / 2)[1];

  std::vector<TwoSiteQuantities> raw_reps;
  std::vector<TwoSiteQuantities> fixed_reps;
  for (int r = 0; r < options.reps; ++r) {
    const auto raw = shot_primitives(g, 0, r, options);
    raw_reps.push_back(assemble(raw, gamma, J, U));
    if (!correct) continue;
    Primitives fixed = raw;
    for (Family f : kFamilies) {
      const auto fi = static_cast<std::size_t>(f);
      const auto ref = shot_primitives(anchor_g[fi], 1, r, options)[fi];
      // Configurations whose ideal anchor vanishes borrow the mean factor of
      // the others in the same family.
      std::array<std::optional<Complex>, kConfigs> factor;
      Complex sum = 0.0;
      int valid = 0;
      for (int k = 0; k < kConfigs; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        if (std::abs(ideal[fi][kk]) < 1e-6 || std::abs(ref[kk]) < 1e-6) continue;
        factor[kk] = pas_factor(ref[kk], ideal[fi][kk]);
        sum += *factor[kk];
        ++valid;
      }
      if (valid == 0) throw std::domain_error("no usable PaS reference in family " + to_string(f));
      const Complex fallback = sum / static_cast<double>(valid);
      for (int k = 0; k < kConfigs; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        fixed[fi][kk] *= factor[kk].value_or(fallback);
      }
    }
    fixed_reps.push_back(assemble(fixed, gamma, J, U));
  }
  point.raw = summarize(raw_reps);
  if (correct) point.corrected = summarize(fixed_reps);
  return point;
}

}  // namespace gutzlcu
