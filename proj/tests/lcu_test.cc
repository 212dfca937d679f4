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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gutzlcu/lcu.h"
#include "support/oracles.h"

namespace gutzlcu {
namespace {

const Complex kI{0.0, 1.0};

StateVector half_filled(const Lattice& lat) {
  const auto s = ground_state_of_K(lat, lat.n_sites / 2);
  return slater_to_statevector(s, s, QubitLayout(lat.n_sites));
}

double max_diff(const StateVector& a, const StateVector& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

TEST(LcuCircuit, ZeroCouplingLeavesAncillasInZero) {
  const auto psi0 = half_filled(build_lattice(LatticeKind::kChain, 2));
  const auto whole = build_lcu_state(psi0, 0.0);
  const auto out = measure_ancillas_success(whole, 2);
  EXPECT_NEAR(out.success_probability, 1.0, 1e-14);
  EXPECT_LT(max_diff(out.projected_state, psi0), 1e-14);
}

TEST(LcuCircuit, SingleSiteMatchesDirectCombination) {
  const auto params = hs_params(1.2);
  const double a = params.alpha;
  // Register diagonal of exp(+-2i alpha eta^z) on |00>, |01>, |10>, |11>.
  const std::vector<Complex> plus{std::exp(-kI * a), 1.0, 1.0, std::exp(kI * a)};
  for (auto variant : {LcuVariant::kSimplified, LcuVariant::kControlledPair}) {
    const auto circ = lcu_circuit(1, params, variant);
    for (std::uint64_t col = 0; col < 8; ++col) {
      auto s = StateVector::basis(3, col);
      apply_circuit(s, circ);
      const std::uint64_t anc_in = col >> 2;
      const std::uint64_t reg = col & 3;
      const Complex up = plus[reg];
      const Complex dn = std::conj(plus[reg]);
      for (std::uint64_t row = 0; row < 8; ++row) {
        Complex want{};
        if ((row & 3) == reg) {
          const std::uint64_t anc_out = row >> 2;
          // H . (|0><0| U- + |1><1| U+) . H
          const double s_in = anc_in ? -1.0 : 1.0;
          const double s_out = anc_out ? -1.0 : 1.0;
          want = 0.5 * (dn + s_in * s_out * up);
        }
        EXPECT_NEAR(std::abs(s[row] - want), 0.0, 1e-12) << row << " " << col;
      }
    }
  }
}

TEST(LcuCircuit, ZeroBranchIsScaledGutzwillerState) {
  const auto lat = build_lattice(LatticeKind::kChain, 2);
  const auto psi0 = half_filled(lat);
  const auto d = hubbard_terms(lat, 1.0, 1.0).interaction;
  for (double g : {0.3, 1.0}) {
    const auto whole = build_lcu_state(psi0, g);
    const auto target = apply_gutzwiller_exact(psi0, g, d);
    for (std::size_t k = 0; k < 16; ++k) {
      EXPECT_NEAR(std::abs(whole[k] - std::exp(-g / 2) * target[k]), 0.0, 1e-12);
    }
  }
}

TEST(LcuCircuit, VariantsProduceIdenticalStates) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n) {
    const auto up = testing::random_slater(n, (n + 1) / 2, rng);
    const auto dn = testing::random_slater(n, n / 2 > 0 ? n / 2 : 1, rng);
    const auto psi0 = slater_to_statevector(up, dn, QubitLayout(n));
    const auto a = build_lcu_state(psi0, 0.9, LcuVariant::kSimplified);
    const auto b = build_lcu_state(psi0, 0.9, LcuVariant::kControlledPair);
    EXPECT_LT(max_diff(a, b), 1e-12) << n;
    EXPECT_NEAR(a.norm(), 1.0, 1e-12);
  }
}

TEST(MeasureAncillas, TwoSiteSuccessProbability) {
  const auto psi0 = half_filled(build_lattice(LatticeKind::kChain, 2));
  const auto out = measure_ancillas_success(build_lcu_state(psi0, 0.5), 2);
  EXPECT_NEAR(out.success_probability, std::exp(-0.5) * std::cosh(0.5), 1e-12);
  EXPECT_NEAR(out.success_probability, 0.68394, 1e-5);
  EXPECT_NEAR(out.projected_state.norm(), 1.0, 1e-12);
}

TEST(MeasureAncillas, ProjectedStateIsNormalizedGutzwillerState) {
  for (const auto& lat : {build_lattice(LatticeKind::kChain, 2), build_lattice(LatticeKind::kChain, 4)}) {
    const auto psi0 = half_filled(lat);
    const auto d = hubbard_terms(lat, 1.0, 1.0).interaction;
    const SuccessProbability closed(lat);
    for (double g : make_grid(0.0, 2.0, 0.5)) {
      for (auto variant : {LcuVariant::kSimplified, LcuVariant::kControlledPair}) {
        const auto out = measure_ancillas_success(build_lcu_state(psi0, g, variant), lat.n_sites);
        auto want = apply_gutzwiller_exact(psi0, g, d);
        const double norm2 = want.norm_squared();
        want.normalize();
        EXPECT_LT(max_diff(out.projected_state, want), 1e-10);
        EXPECT_NEAR(out.success_probability, std::exp(-g * lat.n_sites / 2.0) * norm2, 1e-10);
        EXPECT_NEAR(out.success_probability, closed.p(g), 1e-10);
      }
    }
  }
}

TEST(MeasureAncillas, ZeroProbabilityIsAnError) {
  EXPECT_THROW(measure_ancillas_success(StateVector::basis(3, 0b100), 1), std::domain_error);
}

TEST(SuccessProbability, LimitsAndSlopes) {
  const auto grid = make_grid(0.0, 2.0, 0.1);
  for (int n : {2, 4, 6, 8, 10, 12}) {
    const auto lat = build_lattice(LatticeKind::kChain, n);
    const SuccessProbability sp(lat);
    EXPECT_NEAR(sp.p(0.0), 1.0, 1e-12);
    const double delta = 1e-4;
    EXPECT_NEAR((sp.log_p(delta) - sp.log_p(0.0)) / delta, -n / 2.0, 1e-3) << n;
    EXPECT_NEAR((sp.log_p(12.0 + delta) - sp.log_p(12.0 - delta)) / (2 * delta), 0.0, 1e-3) << n;
    double prev = 2.0;
    for (const auto& row : success_probability_curve(lat, grid)) {
      EXPECT_LE(row.p, prev);
      EXPECT_NEAR(std::log(row.p), row.log_p, 1e-12);
      EXPECT_EQ(row.n_sites, n);
      prev = row.p;
    }
  }
}

TEST(SuccessProbability, DecreasesWithSystemSize) {
  for (double g : {0.1, 0.5, 1.0, 2.0}) {
    double prev = 2.0;
    for (int n : {2, 4, 6, 8, 10, 12}) {
      const double p = SuccessProbability(build_lattice(LatticeKind::kChain, n)).p(g);
      EXPECT_LT(p, prev) << n;
      prev = p;
    }
  }
}

TEST(SuccessProbability, MatchesExactRouteForRandomTrials) {
  std::mt19937_64 rng(14);
  for (int n = 2; n <= 5; ++n) {
    const auto up = testing::random_slater(n, (n + 1) / 2, rng);
    const auto dn = testing::random_slater(n, n / 2, rng);
    const SuccessProbability sp(up, dn);
    const auto psi0 = slater_to_statevector(up, dn, QubitLayout(n));
    const auto d = hubbard_terms(build_lattice(LatticeKind::kChain, n), 1.0, 1.0).interaction;
    for (double g : {0.4, 1.7}) {
      const double norm2 = apply_gutzwiller_exact(psi0, g, d).norm_squared();
      EXPECT_NEAR(sp.p(g), std::exp(-g * n / 2.0) * norm2, 1e-10);
    }
  }
}

TEST(DoccFromSuccess, LimitsAndOracle) {
  const auto two = build_lattice(LatticeKind::kChain, 2);
  EXPECT_NEAR(docc_from_success_probability(two, 0.0), 0.0, 1e-7);
  EXPECT_NEAR(docc_from_success_probability(two, 12.0), -0.5, 1e-6);
  const auto four = build_lattice(LatticeKind::kChain, 4);
  const auto psi0 = half_filled(four);
  const auto d = hubbard_terms(four, 1.0, 1.0).interaction;
  const double oracle = full_sum_expectation(d, 0.5, psi0, QubitLayout(4));
  EXPECT_NEAR(docc_from_success_probability(four, 0.5), oracle, 1e-5);
  EXPECT_NEAR(SuccessProbability(four).interaction(0.5), oracle, 1e-10);
  EXPECT_THROW(docc_from_success_probability(four, 0.5, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace gutzlcu
