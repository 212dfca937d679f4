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

#include "gutzlcu/lcu.h"

#include <bit>
#include <cmath>

namespace gutzlcu {

Circuit lcu_circuit(int n_sites, const HSParams& params, LcuVariant variant) {
  const LcuLayout whole{n_sites};
  const QubitLayout reg(n_sites);
  const double a = params.alpha;
  Circuit c;
  for (int i = 0; i < n_sites; ++i) c.push_back(Gate::h(whole.ancilla(i)));
  for (int i = 0; i < n_sites; ++i) {
    const int anc = whole.ancilla(i);
    const int up = whole.reg(reg.qubit(i, Spin::kUp));
    const int dn = whole.reg(reg.qubit(i, Spin::kDown));
    if (variant == LcuVariant::kControlledPair) {
      // exp(-2 i alpha eta) when the ancilla reads 0 ...
      c.push_back(Gate::x(anc));
      c.push_back(Gate::crz(anc, up, -a));
      c.push_back(Gate::crz(anc, dn, -a));
      c.push_back(Gate::x(anc));
      // ... and exp(+2 i alpha eta) when it reads 1.
      c.push_back(Gate::crz(anc, up, a));
      c.push_back(Gate::crz(anc, dn, a));
    } else {
      c.push_back(Gate::rz(up, -a));
      c.push_back(Gate::rz(dn, -a));
      c.push_back(Gate::crz(anc, up, 2 * a));
      c.push_back(Gate::crz(anc, dn, 2 * a));
    }
  }
  for (int i = 0; i < n_sites; ++i) c.push_back(Gate::h(whole.ancilla(i)));
  return c;
}

StateVector build_lcu_state(const StateVector& trial, double g, LcuVariant variant) {
  if (trial.n_qubits() % 2 != 0) throw std::invalid_argument("trial must hold 2 n_sites qubits");
  const int n = trial.n_qubits() / 2;
  const LcuLayout whole{n};
  // Ancillas are the leading (most significant) qubits, all |0>.
  StateVector state(whole.n_qubits());
  state[0] = 0.0;
  for (std::size_t k = 0; k < trial.dim(); ++k) state[k] = trial[k];
  apply_circuit(state, lcu_circuit(n, hs_params(g), variant));
  return state;
}

LcuOutcome measure_ancillas_success(const StateVector& whole_state, int n_sites) {
  const LcuLayout whole{n_sites};
  if (whole_state.n_qubits() != whole.n_qubits()) {
    throw std::invalid_argument("whole state does not hold 3 n_sites qubits");
  }
  const std::size_t reg_dim = std::size_t{1} << (2 * n_sites);
  std::vector<Complex> reg(whole_state.amplitudes().begin(),
                           whole_state.amplitudes().begin() + static_cast<std::ptrdiff_t>(reg_dim));
  StateVector projected(2 * n_sites, std::move(reg));
  const double p = projected.norm_squared();
  if (!(std::sqrt(p) >= 1e-300)) {
    throw std::domain_error("ancilla |0...0> branch has vanishing amplitude");
  }
  projected.normalize();
  return {p, std::move(projected)};
}

SuccessProbability::SuccessProbability(const Lattice& lattice)
    : SuccessProbability(ground_state_of_K(lattice, lattice.n_sites / 2),
                         ground_state_of_K(lattice, lattice.n_sites / 2)) {
  if (lattice.n_sites % 2 != 0) {
    throw std::invalid_argument("half filling needs an even number of sites");
  }
}

SuccessProbability::SuccessProbability(const SlaterState& up, const SlaterState& down)
    : n_sites_(up.n_sites()), weight_by_singles_(static_cast<std::size_t>(up.n_sites()) + 1) {
  if (down.n_sites() != n_sites_) throw std::invalid_argument("spin sectors differ in size");
  const auto a = sector_amplitudes(up);
  const auto b = sector_amplitudes(down);
  std::vector<double> b_prob;
  for (const auto& [m, amp] : b.entries) b_prob.push_back(std::norm(amp));
  for (const auto& [mu, au] : a.entries) {
    const double pu = std::norm(au);
    for (std::size_t j = 0; j < b.entries.size(); ++j) {
      weight_by_singles_[static_cast<std::size_t>(std::popcount(mu ^ b.entries[j].first))] +=
          pu * b_prob[j];
    }
  }
}

double SuccessProbability::log_p(double g) const {
  // <psi0|exp(-2gD)|psi0> = sum_k w_k exp(-g (n - 2k) / 2), via log-sum-exp.
  double peak = -INFINITY;
  for (std::size_t k = 0; k < weight_by_singles_.size(); ++k) {
    if (weight_by_singles_[k] > 0.0) {
      peak = std::max(peak, -g * (n_sites_ - 2.0 * static_cast<double>(k)) / 2);
    }
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < weight_by_singles_.size(); ++k) {
    if (weight_by_singles_[k] > 0.0) {
      acc += weight_by_singles_[k] *
             std::exp(-g * (n_sites_ - 2.0 * static_cast<double>(k)) / 2 - peak);
    }
  }
  return -g * n_sites_ / 2.0 + peak + std::log(acc);
}

double SuccessProbability::interaction(double g) const {
  double peak = -INFINITY;
  for (std::size_t k = 0; k < weight_by_singles_.size(); ++k) {
    if (weight_by_singles_[k] > 0.0) {
      peak = std::max(peak, -g * (n_sites_ - 2.0 * static_cast<double>(k)) / 2);
    }
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < weight_by_singles_.size(); ++k) {
    if (weight_by_singles_[k] <= 0.0) continue;
    const double d = (n_sites_ - 2.0 * static_cast<double>(k)) / 4;
    const double w = weight_by_singles_[k] * std::exp(-2 * g * d - peak);
    num += w * d;
    den += w;
  }
  return num / den;
}

std::vector<SuccessRow> success_probability_curve(const Lattice& lattice,
                                                  std::span<const double> g_grid) {
  const SuccessProbability sp(lattice);
  std::vector<SuccessRow> rows;
  for (double g : g_grid) {
    const double lp = sp.log_p(g);
    rows.push_back({lattice.n_sites, g, std::exp(lp), lp});
  }
  return rows;
}

double docc_from_success_probability(const Lattice& lattice, double g, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const SuccessProbability sp(lattice);
  const double slope = (sp.log_p(g + delta) - sp.log_p(g - delta)) / (2 * delta);
  return -(lattice.n_sites / 4.0 + slope / 2);
}

}  // namespace gutzlcu
