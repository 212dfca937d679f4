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

#include "gutzlcu/mc.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parallel.h"

namespace gutzlcu {
namespace {

constexpr int kMaxStatevectorSites = 10;

std::vector<Pauli> sector_ops(const PauliTerm& term, int n_sites, Spin spin) {
  const auto first = term.ops.begin() + (spin == Spin::kUp ? 0 : n_sites);
  return {first, first + n_sites};
}

bool singular(const DressedOverlap& ov) { return !(ov.rcond * kMaxOverlapCondition >= 1.0); }

// <O_sigma>_s for one spin sector of a Pauli product, via the determinant
// route. Z strings are the diagonal unitaries exp(i pi n); a lone
// X Z..Z X or Y Z..Z Y is a hop plus a pair term that cannot contribute
// between fixed-number states.
Complex sector_pauli_ratio(const std::vector<Pauli>& ops, const SlaterState& phi,
                           const FieldPhases& bra, const FieldPhases& ket) {
  const int n = static_cast<int>(ops.size());
  std::vector<int> flips;
  for (int k = 0; k < n; ++k) {
    if (ops[static_cast<std::size_t>(k)] == Pauli::kX || ops[static_cast<std::size_t>(k)] == Pauli::kY) {
      flips.push_back(k);
    }
  }
  if (flips.empty()) {
    bool any_z = false;
    FieldPhases z = FieldPhases::identity(n);
    for (int k = 0; k < n; ++k) {
      if (ops[static_cast<std::size_t>(k)] == Pauli::kZ) {
        z.diag[static_cast<std::size_t>(k)] = -1.0;
        any_z = true;
      }
    }
    if (!any_z) return 1.0;
    const auto den = dressed_overlap(phi, bra * ket);
    if (singular(den)) throw SingularOverlapError("dressed overlap matrix is near singular");
    return dressed_overlap(phi, bra * z * ket).value / den.value;
  }
  if (flips.size() == 2) {
    const int i = flips[0];
    const int j = flips[1];
    bool hop = ops[static_cast<std::size_t>(i)] == ops[static_cast<std::size_t>(j)];
    for (int k = 0; k < n && hop; ++k) {
      if (k == i || k == j) continue;
      const Pauli want = (k > i && k < j) ? Pauli::kZ : Pauli::kI;
      hop = ops[static_cast<std::size_t>(k)] == want;
    }
    if (hop) {
      const auto g = dressed_green(phi, bra, ket);
      return g(i, j) + g(j, i);
    }
  }
  throw std::invalid_argument("Pauli product is not a per-spin Z string or single hop: " +
                              PauliTerm{1.0, ops}.op_string());
}

struct DressedPair {
  StateVector bra;  // U_bra^dag |psi0>
  StateVector ket;  // U_ket |psi0>
};

DressedPair dress(const AuxFieldConfig& config, const FieldModel& model) {
  DressedPair out{model.psi0(), model.psi0()};
  apply_circuit(out.ket, field_rotation_circuit(config, 1, model.params(), model.layout()));
  apply_circuit(out.bra,
                inverse(field_rotation_circuit(config, 2, model.params(), model.layout())));
  return out;
}

}  // namespace

std::string to_string(Backend backend) {
  return backend == Backend::kStatevector ? "statevector" : "determinant";
}

Backend parse_backend(const std::string& name) {
  if (name == "statevector") return Backend::kStatevector;
  if (name == "determinant") return Backend::kDeterminant;
  throw std::invalid_argument("unknown backend '" + name + "' (statevector|determinant)");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int McParams::burnin() const { return n_burnin >= 0 ? n_burnin : std::max(n_sweeps / 10, 500); }

void McParams::validate() const {
  if (n_sweeps <= 0) throw std::invalid_argument("n_sweeps must be positive");
  if (n_bins < 10) throw std::invalid_argument("n_bins must be at least 10");
  if (n_chains < 1) throw std::invalid_argument("n_chains must be positive");
  if (n_bins % n_chains != 0) throw std::invalid_argument("n_bins must be divisible by n_chains");
  if (n_sweeps % n_bins != 0) throw std::invalid_argument("n_sweeps must be divisible by n_bins");
}

Trial half_filled_trial(const Lattice& lattice) {
  if (lattice.n_sites % 2 != 0) {
    throw std::invalid_argument("half filling needs an even number of sites");
  }
  const auto phi = ground_state_of_K(lattice, lattice.n_sites / 2);
  return {phi, phi};
}

Observable Observable::pauli(const PauliTerm& term) {
  return {Kind::kPauliProduct, term, term.op_string()};
}

FieldModel::FieldModel(const Lattice& lattice, double J, Trial trial, double g)
    : lattice_(lattice),
      J_(J),
      params_(hs_params(g)),
      trial_(std::move(trial)),
      layout_(lattice.n_sites),
      terms_(hubbard_terms(lattice, J, 0.0)),
      hopping_(lattice.n_sites, lattice.n_sites) {
  if (trial_.up.n_sites() != lattice.n_sites || trial_.down.n_sites() != lattice.n_sites) {
    throw std::invalid_argument("trial does not match the lattice size");
  }
  const auto h = hopping_matrix(lattice, J);
  for (int a = 0; a < lattice.n_sites; ++a) {
    for (int b = 0; b < lattice.n_sites; ++b) {
      hopping_(a, b) = h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
  }
  if (lattice.n_sites <= kMaxStatevectorSites) {
    psi0_ = slater_to_statevector(trial_.up, trial_.down, layout_);
  }
}

const StateVector& FieldModel::psi0() const {
  if (!psi0_) {
    throw std::logic_error("statevector backend limited to " +
                           std::to_string(kMaxStatevectorSites) + " sites");
  }
  return *psi0_;
}

FieldPhases FieldModel::sector_phases(const AuxFieldConfig& config) const {
  return field_phases(config, 2, params_.alpha) * field_phases(config, 1, params_.alpha);
}

Complex weight_numerator(const AuxFieldConfig& config, const FieldModel& model, Backend backend) {
  if (config.n_sites() != model.n_sites()) {
    throw std::invalid_argument("field configuration does not match the lattice");
  }
  if (backend == Backend::kStatevector) {
    const auto d = dress(config, model);
    return inner_product(d.bra, d.ket);
  }
  const auto u = model.sector_phases(config);
  return dressed_overlap(model.trial().up, u).value * dressed_overlap(model.trial().down, u).value;
}

Complex local_estimator(const AuxFieldConfig& config, const Observable& observable,
                        const FieldModel& model, Backend backend) {
  const int n = model.n_sites();
  if (observable.kind == Observable::Kind::kPauliProduct &&
      observable.product.n_qubits() != 2 * n) {
    throw std::invalid_argument("Pauli product must span 2 n_sites qubits");
  }
  if (backend == Backend::kStatevector) {
    const auto d = dress(config, model);
    const Complex w = inner_product(d.bra, d.ket);
    if (std::abs(w) < 1e-300) throw SingularOverlapError("vanishing weight");
    if (observable.kind == Observable::Kind::kKinetic) {
      return matrix_element(d.bra, &model.terms().kinetic, d.ket) / w;
    }
    if (observable.kind == Observable::Kind::kInteraction) {
      return matrix_element(d.bra, &model.terms().interaction, d.ket) / w;
    }
    PauliSum op(2 * n);
    op.add(observable.product);
    return matrix_element(d.bra, &op, d.ket) / w;
  }
  if (observable.kind == Observable::Kind::kKinetic) return local_energy(config, model, backend).kinetic;
  if (observable.kind == Observable::Kind::kInteraction) {
    return local_energy(config, model, backend).interaction;
  }
  const auto bra = field_phases(config, 2, model.params().alpha);
  const auto ket = field_phases(config, 1, model.params().alpha);
  return observable.product.coefficient *
         sector_pauli_ratio(sector_ops(observable.product, n, Spin::kUp), model.trial().up, bra, ket) *
         sector_pauli_ratio(sector_ops(observable.product, n, Spin::kDown), model.trial().down, bra,
                            ket);
}

LocalEnergy local_energy(const AuxFieldConfig& config, const FieldModel& model, Backend backend) {
  if (backend == Backend::kStatevector) {
    return {local_estimator(config, Observable::kinetic(), model, backend),
            local_estimator(config, Observable::interaction(), model, backend)};
  }
  const auto bra = field_phases(config, 2, model.params().alpha);
  const auto ket = field_phases(config, 1, model.params().alpha);
  const auto g_up = dressed_green(model.trial().up, bra, ket);
  const auto g_dn = dressed_green(model.trial().down, bra, ket);
  LocalEnergy out;
  out.kinetic = model.hopping().cwiseProduct(g_up).sum() + model.hopping().cwiseProduct(g_dn).sum();
  out.interaction = 0.0;
  for (int i = 0; i < model.n_sites(); ++i) {
    out.interaction += (g_up(i, i) - 0.5) * (g_dn(i, i) - 0.5);
  }
  return out;
}

double checked_weight(Complex w) {
  if (!(std::abs(w.imag()) <= kWeightImagTolerance) || !(w.real() >= -kWeightNegTolerance)) {
    throw PhaseProblemError("weight " + std::to_string(w.real()) + (w.imag() < 0 ? "" : "+") +
                            std::to_string(w.imag()) + "i is not real nonnegative");
  }
  return std::max(w.real(), 0.0);
}

double acceptance_probability(double w_old, double w_new) {
  if (w_new <= 0.0) return 0.0;
  if (w_old <= 0.0) return 1.0;
  return std::min(1.0, w_new / w_old);
}

ChainState init_chain(const FieldModel& model, Backend backend) {
  ChainState chain;
  chain.config = AuxFieldConfig(model.n_sites());
  if (backend == Backend::kDeterminant) {
    const auto u = model.sector_phases(chain.config);
    chain.overlap_up = dressed_overlap(model.trial().up, u).value;
    chain.overlap_down = dressed_overlap(model.trial().down, u).value;
    chain.weight = chain.overlap_up * chain.overlap_down;
  } else {
    chain.weight = weight_numerator(chain.config, model, backend);
    chain.overlap_up = chain.overlap_down = std::sqrt(chain.weight);
  }
  checked_weight(chain.weight);
  return chain;
}

SweepStats metropolis_sweep(ChainState& chain, const FieldModel& model, Backend backend,
                            McRng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  SweepStats stats;
  double w_old = checked_weight(chain.weight);
  for (int site = 0; site < model.n_sites(); ++site) {
    for (int tau = 1; tau <= 2; ++tau) {
      ++stats.proposals;
      chain.config.flip(site, tau);
      Complex w_new;
      Complex ov_up;
      Complex ov_dn;
      bool reject = false;
      if (backend == Backend::kDeterminant) {
        const auto u = model.sector_phases(chain.config);
        const auto up = dressed_overlap(model.trial().up, u);
        const auto dn = dressed_overlap(model.trial().down, u);
        if (singular(up) || singular(dn)) {
          reject = true;
          ++stats.singular;
        }
        ov_up = up.value;
        ov_dn = dn.value;
        w_new = ov_up * ov_dn;
      } else {
        w_new = weight_numerator(chain.config, model, backend);
        ov_up = ov_dn = std::sqrt(w_new);
      }
      const double w = reject ? 0.0 : checked_weight(w_new);
      const double draw = uniform(rng);
      if (!reject && draw < acceptance_probability(w_old, w)) {
        ++stats.accepted;
        chain.weight = w_new;
        chain.overlap_up = ov_up;
        chain.overlap_down = ov_dn;
        w_old = w;
      } else {
        chain.config.flip(site, tau);
      }
    }
  }
  return stats;
}

double cached_weight_drift(const ChainState& chain, const FieldModel& model, Backend backend) {
  const Complex fresh = weight_numerator(chain.config, model, backend);
  return std::abs(fresh - chain.weight) / std::max(std::abs(fresh), 1e-300);
}

std::pair<double, double> bin_statistics(const std::vector<double>& bin_means) {
  const auto n = static_cast<double>(bin_means.size());
  if (bin_means.size() < 2) throw std::invalid_argument("need at least two bins");
  const double mean = std::accumulate(bin_means.begin(), bin_means.end(), 0.0) / n;
  double ss = 0.0;
  for (double b : bin_means) ss += (b - mean) * (b - mean);
  return {mean, std::sqrt(ss / (n - 1) / n)};
}

namespace {

struct ChainBins {
  std::vector<double> kinetic;
  std::vector<double> interaction;
  long proposals = 0;
  long accepted = 0;
  long singular = 0;
};

ChainBins run_chain(const FieldModel& model, const McParams& params, std::uint64_t seed,
                    int sweeps, int bins) {
  McRng rng(seed);
  auto chain = init_chain(model, params.backend);
  ChainBins out;
  for (int k = 0; k < params.burnin(); ++k) metropolis_sweep(chain, model, params.backend, rng);
  const int per_bin = sweeps / bins;
  for (int b = 0; b < bins; ++b) {
    double k_sum = 0.0;
    double d_sum = 0.0;
    int measured = 0;
    for (int k = 0; k < per_bin; ++k) {
      const auto st = metropolis_sweep(chain, model, params.backend, rng);
      out.proposals += st.proposals;
      out.accepted += st.accepted;
      out.singular += st.singular;
      try {
        const auto e = local_energy(chain.config, model, params.backend);
        k_sum += e.kinetic.real();
        d_sum += e.interaction.real();
        ++measured;
      } catch (const SingularOverlapError&) {
        ++out.singular;
      }
    }
    if (measured == 0) throw SingularOverlapError("no measurable configuration in a bin");
    out.kinetic.push_back(k_sum / measured);
    out.interaction.push_back(d_sum / measured);
  }
  return out;
}

EstimatorResult make_result(std::string name, const std::vector<double>& bins, long samples,
                            double acceptance) {
  const auto [mean, err] = bin_statistics(bins);
  return {std::move(name), mean, err, samples, acceptance};
}

}  // namespace

McRun run_mc(const Lattice& lattice, double J, double U, double g, const McParams& params) {
  return run_mc(FieldModel(lattice, J, half_filled_trial(lattice), g), U, params);
}

McRun run_mc(const FieldModel& model, double U, const McParams& params) {
  const double u[1] = {U};
  return run_mc(model, std::span<const double>(u), params).front();
}

std::vector<McRun> run_mc(const FieldModel& model, std::span<const double> U_values,
                          const McParams& params) {
  params.validate();
  const int chains = params.n_chains;
  const int sweeps = params.n_sweeps / chains;
  const int bins = params.n_bins / chains;
  if (sweeps % bins != 0) throw std::invalid_argument("sweeps per chain must split into bins");
  std::vector<ChainBins> results(static_cast<std::size_t>(chains));
  detail::parallel_for(static_cast<std::size_t>(chains), [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      results[c] = run_chain(model, params, splitmix64(params.seed + c), sweeps, bins);
    }
  });

  long proposals = 0;
  long accepted = 0;
  long singular_count = 0;
  for (const auto& r : results) {
    proposals += r.proposals;
    accepted += r.accepted;
    singular_count += r.singular;
  }
  const double acc = proposals > 0 ? static_cast<double>(accepted) / static_cast<double>(proposals) : 0.0;

  std::vector<McRun> runs;
  for (double U : U_values) {
    std::vector<double> kin;
    std::vector<double> pot;
    std::vector<double> energy;
    for (const auto& r : results) {
      for (std::size_t b = 0; b < r.kinetic.size(); ++b) {
        kin.push_back(r.kinetic[b]);
        pot.push_back(U * r.interaction[b]);
        energy.push_back(r.kinetic[b] + U * r.interaction[b]);
      }
    }
    McRun run;
    run.energy = make_result("E", energy, params.n_sweeps, acc);
    run.kinetic = make_result("K", kin, params.n_sweeps, acc);
    run.potential = make_result("UD", pot, params.n_sweeps, acc);
    run.acceptance_rate = acc;
    run.burnin = params.burnin();
    run.singular_rejections = singular_count;

    const std::size_t half = energy.size() / 2;
    if (half >= 2) {
      const auto [m1, e1] = bin_statistics({energy.begin(), energy.begin() + static_cast<std::ptrdiff_t>(half)});
      const auto [m2, e2] = bin_statistics({energy.begin() + static_cast<std::ptrdiff_t>(half), energy.end()});
      const double err = std::hypot(e1, e2);
      run.half_split_sigma = err > 0.0 ? std::abs(m1 - m2) / err : 0.0;
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

std::vector<Complex> enumerate_weights(const FieldModel& model, Backend backend) {
  const int n = model.n_sites();
  if (n > kMaxEnumerationSites) {
    throw std::invalid_argument("configuration enumeration limited to " +
                                std::to_string(kMaxEnumerationSites) + " sites");
  }
  const std::size_t total = std::size_t{1} << (2 * n);
  std::vector<Complex> w(total);
  detail::parallel_for(total, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      w[k] = weight_numerator(AuxFieldConfig::from_index(n, k), model, backend);
    }
  });
  return w;
}

std::vector<long> sample_config_histogram(const FieldModel& model, int n_sweeps, int n_burnin,
                                          std::uint64_t seed) {
  const int n = model.n_sites();
  if (n > kMaxEnumerationSites) throw std::invalid_argument("histogram limited to small lattices");
  McRng rng(seed);
  auto chain = init_chain(model, Backend::kDeterminant);
  for (int k = 0; k < n_burnin; ++k) metropolis_sweep(chain, model, Backend::kDeterminant, rng);
  std::vector<long> counts(std::size_t{1} << (2 * n), 0);
  for (int k = 0; k < n_sweeps; ++k) {
    metropolis_sweep(chain, model, Backend::kDeterminant, rng);
    ++counts[chain.config.index()];
  }
  return counts;
}

PhaseReport phase_problem_check(const FieldModel& model, Backend backend) {
  if (model.n_sites() > kMaxPhaseCheckSites) {
    throw std::invalid_argument("phase-problem check limited to " +
                                std::to_string(kMaxPhaseCheckSites) + " sites");
  }
  const auto w = enumerate_weights(model, backend);
  PhaseReport r;
  r.n_configs = static_cast<int>(w.size());
  r.min_real = INFINITY;
  for (const auto& x : w) {
    r.max_abs_imag = std::max(r.max_abs_imag, std::abs(x.imag()));
    r.min_real = std::min(r.min_real, x.real());
  }
  r.pass = r.max_abs_imag < kWeightImagTolerance && r.min_real >= -kWeightNegTolerance;
  return r;
}

}  // namespace gutzlcu
