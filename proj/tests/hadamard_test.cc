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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gutzlcu/hadamard.h"
#include "support/oracles.h"

namespace gutzlcu {
namespace {

const double kGOpt = std::log(1.0 + std::sqrt(2.0));

StateVector bell() {
  return sector_to_statevector(ground_state_of_K(build_lattice(LatticeKind::kChain, 2), 1));
}

std::vector<Pauli> ops_of(const std::string& s) { return PauliTerm::from_string(1.0, s).ops; }

TEST(HadamardExact, TrivialValues) {
  const auto psi = bell();
  const double alpha = hs_params(0.9).alpha;
  auto c = AuxFieldConfig::from_index(2, 0b0001);
  for (int i = 0; i < 2; ++i) c.set(i, 2, -c(i, 1));
  EXPECT_NEAR(std::abs(hadamard_exact(c, ops_of("II"), psi, alpha) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(hadamard_exact(AuxFieldConfig(2), ops_of("XX"), psi, 0.0) - 1.0), 0.0, 1e-14);
  EXPECT_THROW(hadamard_exact(AuxFieldConfig(3), ops_of("XX"), psi, 0.0), std::invalid_argument);
}

TEST(HadamardExact, SumOfIdentityPrimitivesGivesNormalization) {
  const auto psi = bell();
  for (double g : {0.0, 0.4, 1.0, 2.0}) {
    const auto p = hs_params(g);
    Complex sum = 0.0;
    Complex sum_sq = 0.0;
    for (std::uint64_t k = 0; k < 16; ++k) {
      const Complex v = hadamard_exact(AuxFieldConfig::from_index(2, k), ops_of("II"), psi, p.alpha);
      EXPECT_LE(std::abs(v), 1.0 + 1e-12);
      sum += v;
      sum_sq += v * v;
    }
    EXPECT_GT(sum.real(), 0.0);
    EXPECT_LT(std::abs(sum.imag()), 1e-12);
    // One spin sector carries gamma^2; the two-sector norm squares per config.
    EXPECT_NEAR(std::pow(p.gamma, 4) * sum_sq.real(), std::cosh(g), 1e-12);
  }
}

TEST(HadamardExact, BoundedForRandomStates) {
  std::mt19937_64 rng(4);
  const double alpha = hs_params(1.3).alpha;
  for (int t = 0; t < 20; ++t) {
    const auto psi = testing::random_state(3, rng);
    const auto c = AuxFieldConfig::from_index(3, static_cast<std::uint64_t>(t * 3));
    for (const char* o : {"III", "XZY", "ZZI", "YYX"}) {
      EXPECT_LE(std::abs(hadamard_exact(c, ops_of(o), psi, alpha)), 1.0 + 1e-12);
    }
  }
}

TEST(HadamardCircuit, AncillaProbabilityEncodesMatrixElement) {
  std::mt19937_64 rng(6);
  const double alpha = hs_params(0.7).alpha;
  for (int t = 0; t < 12; ++t) {
    const auto psi = testing::random_state(3, rng);
    const auto c = AuxFieldConfig::from_index(3, static_cast<std::uint64_t>(5 * t + 1));
    for (const char* o : {"III", "XIX", "ZYI", "YZX", "ZZZ"}) {
      const Complex v = hadamard_exact(c, ops_of(o), psi, alpha);
      EXPECT_NEAR(2.0 * hadamard_test_p0(c, ops_of(o), psi, alpha, false) - 1.0, v.real(), 1e-12) << o;
      EXPECT_NEAR(2.0 * hadamard_test_p0(c, ops_of(o), psi, alpha, true) - 1.0, v.imag(), 1e-12) << o;
    }
  }
}

TEST(HadamardShots, ExactOneNeverFlips) {
  std::mt19937_64 rng(1);
  const auto e = hadamard_shots(AuxFieldConfig(2), ops_of("II"), bell(), 0.0, 8192, rng);
  EXPECT_EQ(e.real_part, 1.0);
  EXPECT_EQ(e.real_stderr, 0.0);
  EXPECT_EQ(e.shots, 8192);
  EXPECT_THROW(hadamard_shots_from_value(0.5, 0, rng), std::invalid_argument);
}

TEST(HadamardShots, ConvergesAtLargeShotCounts) {
  std::mt19937_64 rng(2);
  const auto psi = bell();
  const double alpha = hs_params(1.1).alpha;
  for (std::uint64_t k : {1u, 6u, 11u}) {
    const auto c = AuxFieldConfig::from_index(2, k);
    for (const char* o : {"II", "ZI", "XX"}) {
      const Complex v = hadamard_exact(c, ops_of(o), psi, alpha);
      const auto e = hadamard_shots(c, ops_of(o), psi, alpha, 1000000, rng);
      EXPECT_LE(std::abs(e.real_part - v.real()), 5.0 * std::max(e.real_stderr, 1e-6));
      EXPECT_LE(std::abs(e.imag_part - v.imag()), 5.0 * std::max(e.imag_stderr, 1e-6));
    }
  }
}

TEST(HadamardShots, RepetitionSpreadMatchesBinomialError) {
  std::mt19937_64 rng(3);
  const Complex v{0.3, -0.45};
  std::vector<double> re;
  double stderr_sum = 0.0;
  for (int r = 0; r < 16; ++r) {
    const auto e = hadamard_shots_from_value(v, 8192, rng);
    re.push_back(e.real_part);
    stderr_sum += e.real_stderr;
    EXPECT_GE(e.real_part, -1.0);
    EXPECT_LE(e.real_part, 1.0);
  }
  double m = 0.0;
  for (double x : re) m += x;
  m /= 16;
  double ss = 0.0;
  for (double x : re) ss += (x - m) * (x - m);
  const double spread = std::sqrt(ss / 15);
  const double predicted = stderr_sum / 16;
  EXPECT_GT(spread, predicted / 2);
  EXPECT_LT(spread, predicted * 2);
}

TEST(HadamardShots, UnbiasedOverManyRuns) {
  std::mt19937_64 rng(5);
  const auto psi = testing::random_state(2, rng);
  const double alpha = hs_params(0.6).alpha;
  for (std::uint64_t k : {3u, 9u, 14u}) {
    const auto c = AuxFieldConfig::from_index(2, k);
    const Complex v = hadamard_exact(c, ops_of("XX"), psi, alpha);
    double sum = 0.0;
    for (int r = 0; r < 200; ++r) sum += hadamard_shots(c, ops_of("XX"), psi, alpha, 8192, rng).real_part;
    const double mean = sum / 200;
    const double sem = std::sqrt(std::max(0.0, 1.0 - v.real() * v.real()) / 8192 / 200);
    EXPECT_GT(sem, 0.0);
    EXPECT_LE(std::abs(mean - v.real()), 4.0 * sem + 1e-12) << k;
  }
}

TEST(Pas, IdentityAndScaleRecovery) {
  const std::vector<Complex> raw{0.5, Complex{0.2, 0.1}, -0.7};
  const auto same = pas_correct(raw, Complex{0.4, 0.3}, Complex{0.4, 0.3});
  for (std::size_t k = 0; k < raw.size(); ++k) EXPECT_NEAR(std::abs(same[k] - raw[k]), 0.0, 1e-15);
  const double c = 0.85;
  std::vector<Complex> biased;
  for (const auto& v : raw) biased.push_back(c * v);
  const auto fixed = pas_correct(biased, c, 1.0);
  for (std::size_t k = 0; k < raw.size(); ++k) EXPECT_NEAR(std::abs(fixed[k] - raw[k]), 0.0, 1e-15);
  EXPECT_THROW(pas_factor(1e-7, 1.0), std::domain_error);
  EXPECT_THROW(pas_factor(0.5, 0.0), std::domain_error);
}

TEST(Pas, ScaleAndPhaseBiasResidual) {
  const auto psi = bell();
  const BiasModel pure = BiasModel::depth_scaled(0.8);
  const BiasModel mixed = BiasModel::depth_scaled(0.8, 0.0, 0.05);
  for (std::uint64_t k = 1; k < 16; ++k) {
    const auto c = AuxFieldConfig::from_index(2, k);
    const double alpha = hs_params(1.5).alpha;
    const Complex exact = hadamard_exact(c, ops_of("XX"), psi, alpha);
    const Complex ref_ideal = hadamard_exact(c, ops_of("XX"), psi, 0.0);
    if (std::abs(ref_ideal) < 1e-6) continue;
    const Complex ref_pure = pure.apply(Family::kXX, 0.0, ref_ideal);
    const Complex got_pure = pas_correct({pure.apply(Family::kXX, alpha, exact)}, ref_pure, ref_ideal)[0];
    EXPECT_NEAR(std::abs(got_pure - exact), 0.0, 1e-14);
    const Complex biased = mixed.apply(Family::kXX, alpha, exact);
    const Complex ref_mixed = mixed.apply(Family::kXX, 0.0, ref_ideal);
    const Complex got_mixed = pas_correct({biased}, ref_mixed, ref_ideal)[0];
    if (std::abs(exact) > 1e-6) {
      EXPECT_LE(std::abs(got_mixed - exact) * 5.0, std::abs(biased - exact) + 1e-15) << k;
    }
  }
}

TEST(BiasModel, DepthScaledAndValidation) {
  const auto b = BiasModel::depth_scaled(0.9, 0.1);
  EXPECT_NEAR(b.scale[0], 0.9, 1e-15);
  EXPECT_NEAR(b.scale[1], 0.81, 1e-15);
  EXPECT_NEAR(b.scale[2], 0.729, 1e-15);
  EXPECT_THROW(BiasModel::depth_scaled(1.2), std::invalid_argument);
  EXPECT_THROW(BiasModel::depth_scaled(0.0), std::invalid_argument);
  EXPECT_NEAR(std::abs(b.apply(Family::kII, 0.0, 1.0) - std::polar(0.9, 0.1)), 0.0, 1e-15);
}

TEST(TwoSiteAssembly, ExactModeReproducesClosedForm) {
  for (double U : {1.0, 4.0}) {
    const auto grid = make_grid(0.0, 2.0, 0.1);
    const auto curves = two_site_curves(1.0, U, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const auto q = two_site_exact_primitives(grid[k], 1.0, U);
      EXPECT_NEAR(q.energy, curves.energy[k], 1e-10);
      EXPECT_NEAR(q.kinetic, curves.kinetic[k], 1e-10);
      EXPECT_NEAR(q.potential, curves.potential[k], 1e-10);
      EXPECT_NEAR(q.denominator, std::cosh(grid[k]), 1e-10);
      EXPECT_NEAR(q.zz_numerator, -std::sinh(grid[k]), 1e-10);
      EXPECT_NEAR(q.xx_numerator, 1.0, 1e-10);
    }
  }
  ShotOptions exact_only;
  exact_only.shots = 0;
  const auto p = two_site_energy_from_primitives(0.5, 1.0, 4.0, exact_only);
  EXPECT_FALSE(p.raw.has_value());
  EXPECT_NEAR(p.exact.energy, -(2.0 + 2.0 * std::sinh(0.5)) / std::cosh(0.5), 1e-10);
}

TEST(TwoSiteAssembly, ShotsWithoutBiasAgreeAtOptimum) {
  ShotOptions o;
  o.seed = 42;
  const auto p = two_site_energy_from_primitives(kGOpt, 1.0, 4.0, o);
  ASSERT_TRUE(p.raw.has_value());
  EXPECT_FALSE(p.corrected.has_value());
  EXPECT_NEAR(p.raw->mean.energy, -2.0 * std::sqrt(2.0), 3.0 * p.raw->err.energy);
  EXPECT_GT(p.raw->err.energy, 0.0);
}

TEST(TwoSiteAssembly, PasRepairsScaleBias) {
  ShotOptions o;
  o.seed = 7;
  o.bias = BiasModel::depth_scaled(0.85);
  const auto p = two_site_energy_from_primitives(kGOpt, 1.0, 4.0, o);
  ASSERT_TRUE(p.corrected.has_value());
  const double exact = -2.0 * std::sqrt(2.0);
  EXPECT_GT(std::abs(p.raw->mean.energy - exact), 3.0 * p.raw->err.energy);
  EXPECT_LE(std::abs(p.corrected->mean.energy - exact), 3.0 * p.corrected->err.energy);
}

TEST(TwoSiteAssembly, SameSeedSameResult) {
  ShotOptions o;
  o.seed = 3;
  o.reps = 4;
  const auto a = two_site_energy_from_primitives(0.7, 1.0, 2.0, o);
  const auto b = two_site_energy_from_primitives(0.7, 1.0, 2.0, o);
  EXPECT_EQ(a.raw->mean.energy, b.raw->mean.energy);
  o.reps = 1;
  EXPECT_THROW(two_site_energy_from_primitives(0.7, 1.0, 2.0, o), std::invalid_argument);
}

}  // namespace
}  // namespace gutzlcu
