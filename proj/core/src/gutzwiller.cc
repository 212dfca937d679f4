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

#include "gutzlcu/gutzwiller.h"

#include <bit>
#include <cmath>

#include "parallel.h"

namespace gutzlcu {

HSParams hs_params(double g) {
  if (!(g >= 0.0) || !std::isfinite(g)) {
    throw std::invalid_argument("Gutzwiller parameter g must be finite and non-negative");
  }
  return {g, std::acos(std::exp(-g / 2)), std::exp(g / 4) / 2};
}

double verify_hs_identity(double g) {
  const auto p = hs_params(g);
  const Complex i{0.0, 1.0};
  double worst = 0.0;
  for (int n_up = 0; n_up <= 1; ++n_up) {
    for (int n_dn = 0; n_dn <= 1; ++n_dn) {
      const double lhs = std::exp(-g * (n_up - 0.5) * (n_dn - 0.5));
      Complex rhs{};
      for (int s : {1, -1}) rhs += std::exp(i * (p.alpha * s * (n_up + n_dn - 1)));
      rhs *= p.gamma;
      worst = std::max(worst, std::abs(rhs - lhs));
    }
  }
  // Off-diagonal entries vanish identically on both sides.
  return worst;
}

AuxFieldConfig::AuxFieldConfig(int n_sites) : n_sites_(n_sites) {
  if (n_sites < 1) throw std::invalid_argument("field configuration needs a site");
  s_.assign(2 * static_cast<std::size_t>(n_sites), 1);
}

AuxFieldConfig AuxFieldConfig::from_index(int n_sites, std::uint64_t index) {
  AuxFieldConfig c(n_sites);
  if (2 * n_sites < 64 && index >> (2 * n_sites)) {
    throw std::out_of_range("configuration index out of range");
  }
  for (std::size_t k = 0; k < c.s_.size(); ++k) c.s_[k] = ((index >> k) & 1) ? -1 : 1;
  return c;
}

std::uint64_t AuxFieldConfig::index() const {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < s_.size(); ++k) {
    if (s_[k] < 0) idx |= std::uint64_t{1} << k;
  }
  return idx;
}

std::size_t AuxFieldConfig::slot(int site, int tau) const {
  if (site < 0 || site >= n_sites_ || (tau != 1 && tau != 2)) {
    throw std::out_of_range("field (" + std::to_string(site) + ", " + std::to_string(tau) +
                            ") out of range");
  }
  return static_cast<std::size_t>(tau - 1) * n_sites_ + site;
}

void AuxFieldConfig::set(int site, int tau, int value) {
  if (value != 1 && value != -1) throw std::invalid_argument("auxiliary field must be +-1");
  s_[slot(site, tau)] = value;
}

AuxFieldConfig AuxFieldConfig::negated() const {
  AuxFieldConfig out = *this;
  for (auto& v : out.s_) v = -v;
  return out;
}

FieldPhases field_phases(const AuxFieldConfig& config, int tau, double alpha) {
  const Complex i{0.0, 1.0};
  FieldPhases out;
  out.diag.resize(static_cast<std::size_t>(config.n_sites()));
  double total = 0.0;
  for (int site = 0; site < config.n_sites(); ++site) {
    const int s = config(site, tau);
    out.diag[static_cast<std::size_t>(site)] = std::exp(i * (alpha * s));
    total += s;
  }
  out.scalar = std::exp(-i * (alpha * total / 2));
  return out;
}

Circuit field_rotation_circuit(const AuxFieldConfig& config, int tau, const HSParams& params,
                               const QubitLayout& layout) {
  if (config.n_sites() != layout.n_sites()) {
    throw std::invalid_argument("field configuration does not match the layout");
  }
  Circuit c;
  c.reserve(2 * static_cast<std::size_t>(layout.n_sites()));
  for (int site = 0; site < layout.n_sites(); ++site) {
    const double theta = config(site, tau) * params.alpha;
    c.push_back(Gate::rz(layout.qubit(site, Spin::kUp), theta));
    c.push_back(Gate::rz(layout.qubit(site, Spin::kDown), theta));
  }
  return c;
}

std::vector<double> diagonal_of(const PauliSum& op) {
  const std::uint64_t dim = std::uint64_t{1} << op.n_qubits();
  std::vector<double> d(dim, 0.0);
  for (const auto& t : op.terms()) {
    const auto m = masks_of(t.ops);
    if (m.x_mask != 0) throw std::invalid_argument("operator is not diagonal (contains X or Y)");
    const double c = t.coefficient.real();
    for (std::uint64_t b = 0; b < dim; ++b) d[b] += (std::popcount(b & m.z_mask) & 1) ? -c : c;
  }
  return d;
}

StateVector apply_gutzwiller_exact(const StateVector& state, double g,
                                   const PauliSum& interaction) {
  if (interaction.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("interaction and state qubit counts differ");
  }
  const auto d = diagonal_of(interaction);
  StateVector out = state;
  for (std::size_t b = 0; b < out.dim(); ++b) out[b] *= std::exp(-g * d[b]);
  return out;
}

StateVector apply_gutzwiller_projector(const StateVector& state, double g_tilde,
                                       const QubitLayout& layout) {
  if (state.n_qubits() != layout.n_qubits()) throw std::invalid_argument("layout mismatch");
  const int n = layout.n_sites();
  const std::uint64_t low = (std::uint64_t{1} << n) - 1;
  StateVector out = state;
  for (std::uint64_t b = 0; b < out.dim(); ++b) {
    const int doubles = std::popcount((b >> n) & b & low);
    out[b] *= doubles == 0 ? 1.0 : std::pow(g_tilde, doubles);
  }
  return out;
}

GutzwillerObservables exact_gutzwiller_observables(const StateVector& trial, double g,
                                                   const HubbardTerms& terms) {
  StateVector psi = apply_gutzwiller_exact(trial, g, terms.interaction);
  GutzwillerObservables out;
  out.norm_squared = psi.norm_squared();
  psi.normalize();
  out.kinetic = expectation(psi, terms.kinetic).real();
  out.interaction = expectation(psi, terms.interaction).real();
  return out;
}

Complex pairwise_sum(std::span<const Complex> v) {
  if (v.size() <= 8) {
    Complex acc{};
    for (const auto& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

double full_sum_expectation(const PauliSum& observable, double g, const StateVector& trial,
                            const QubitLayout& layout) {
  const int n = layout.n_sites();
  if (n > kMaxEnumerationSites) {
    throw std::invalid_argument("full field enumeration limited to " +
                                std::to_string(kMaxEnumerationSites) + " sites, got " +
                                std::to_string(n));
  }
  if (trial.n_qubits() != layout.n_qubits() || observable.n_qubits() != layout.n_qubits()) {
    throw std::invalid_argument("trial, observable and layout disagree on qubit count");
  }
  const auto params = hs_params(g);
  const std::size_t half = std::size_t{1} << n;  // configurations per tau

  // ket[s1] = U_{s1}|psi0>, op_ket[s1] = O U_{s1}|psi0>, bra[s2] = U_{s2}^dag |psi0>
  std::vector<StateVector> ket(half), op_ket(half), bra(half);
  detail::parallel_for(half, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto c1 = AuxFieldConfig::from_index(n, k);
      const auto c2 = AuxFieldConfig::from_index(n, k << n);
      ket[k] = trial;
      apply_circuit(ket[k], field_rotation_circuit(c1, 1, params, layout));
      op_ket[k] = apply_pauli_sum(observable, ket[k]);
      bra[k] = trial;
      apply_circuit(bra[k], inverse(field_rotation_circuit(c2, 2, params, layout)));
    }
  });

  const std::size_t total = half * half;
  std::vector<Complex> numerator(total), denominator(total);
  detail::parallel_for(total, [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t s1 = idx & (half - 1);
      const std::size_t s2 = idx >> n;
      numerator[idx] = inner_product(bra[s2], op_ket[s1]);
      denominator[idx] = inner_product(bra[s2], ket[s1]);
    }
  });
  const Complex num = pairwise_sum(numerator);
  const Complex den = pairwise_sum(denominator);
  return (num / den).real();
}

TwoSiteCurves two_site_curves(double J, double U, std::span<const double> g_grid) {
  if (!(J > 0.0)) throw std::invalid_argument("J must be positive");
  TwoSiteCurves c;
  c.J = J;
  c.U = U;
  for (double g : g_grid) {
    const double ch = std::cosh(g);
    c.g.push_back(g);
    c.kinetic.push_back(-2 * J / ch);
    c.potential.push_back(-U / 2 * std::sinh(g) / ch);
    c.energy.push_back(-(2 * J + U / 2 * std::sinh(g)) / ch);
  }
  c.g_opt = std::asinh(U / (4 * J));
  c.energy_opt = -std::sqrt(4 * J * J + U * U / 4);
  return c;
}

std::vector<double> make_grid(double g_min, double g_max, double step) {
  if (!(step > 0.0) || !(g_max >= g_min) || !std::isfinite(g_min) || !std::isfinite(g_max)) {
    throw std::invalid_argument("grid needs step > 0 and g_max >= g_min");
  }
  const auto n = static_cast<long>(std::floor((g_max - g_min) / step + 1e-9));
  std::vector<double> grid;
  for (long k = 0; k <= n; ++k) grid.push_back(g_min + static_cast<double>(k) * step);
  return grid;
}

}  // namespace gutzlcu
