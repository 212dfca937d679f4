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

#include <gtest/gtest.h>

#include "gutzlcu/lattice.h"
#include "gutzlcu/statevector.h"
#include "support/oracles.h"

namespace gutzlcu {
namespace {

using testing::Dense;
using testing::to_dense;

TEST(BuildLattice, SmallestChain) {
  const auto lat = build_lattice(LatticeKind::kChain, 2);
  ASSERT_EQ(lat.edges.size(), 1u);
  EXPECT_EQ(lat.edges[0], std::make_pair(0, 1));
}

TEST(BuildLattice, ChainFourEdgesAndColoring) {
  const auto lat = build_lattice(LatticeKind::kChain, 4);
  const std::vector<std::pair<int, int>> want{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(lat.edges, want);
  EXPECT_EQ(lat.sublattice, (std::vector<int>{1, -1, 1, -1}));
}

TEST(BuildLattice, LadderEightHasSixLegAndFourRungEdges) {
  const auto lat = build_lattice(LatticeKind::kLadder, 8);
  ASSERT_EQ(lat.edges.size(), 10u);
  // Snake: leg A = 0..3, leg B = 4..7 running back, rung x <-> 7 - x.
  int legs = 0;
  int rungs = 0;
  for (const auto& [i, j] : lat.edges) {
    EXPECT_LT(i, j);
    if (i + j == 7 && i < 4 && j >= 4) {
      ++rungs;
    } else {
      EXPECT_EQ(j - i, 1);
      EXPECT_TRUE((i < 4) == (j < 4));
      ++legs;
    }
  }
  EXPECT_EQ(legs, 6);
  EXPECT_EQ(rungs, 4);
  EXPECT_NO_THROW(validate(lat));
}

TEST(BuildLattice, RejectsBadInput) {
  EXPECT_THROW(build_lattice(LatticeKind::kLadder, 7), std::invalid_argument);
  EXPECT_THROW(build_lattice(LatticeKind::kChain, 1), std::invalid_argument);
  EXPECT_THROW(parse_lattice("triangle:4"), std::invalid_argument);
  EXPECT_THROW(parse_lattice("chain"), std::invalid_argument);
  EXPECT_EQ(parse_lattice("ladder:6").n_sites, 6);
}

TEST(Validate, CatchesBrokenLattices) {
  auto lat = build_lattice(LatticeKind::kChain, 4);
  auto dup = lat;
  dup.edges.push_back({0, 1});
  EXPECT_THROW(validate(dup), std::invalid_argument);
  auto self = lat;
  self.edges.push_back({2, 2});
  EXPECT_THROW(validate(self), std::invalid_argument);
  auto range = lat;
  range.edges.push_back({1, 9});
  EXPECT_THROW(validate(range), std::invalid_argument);
  auto color = lat;
  color.sublattice[1] = 1;
  EXPECT_THROW(validate(color), std::invalid_argument);
}

TEST(QubitLayout, SpinUpBlockFirstAndBijective) {
  const QubitLayout layout(3);
  EXPECT_EQ(layout.qubit(0, Spin::kUp), 0);
  EXPECT_EQ(layout.qubit(2, Spin::kUp), 2);
  EXPECT_EQ(layout.qubit(0, Spin::kDown), 3);
  std::vector<bool> hit(6, false);
  for (int s = 0; s < 3; ++s) {
    for (Spin sp : {Spin::kUp, Spin::kDown}) {
      const int q = layout.qubit(s, sp);
      EXPECT_FALSE(hit[static_cast<std::size_t>(q)]);
      hit[static_cast<std::size_t>(q)] = true;
      EXPECT_EQ(layout.site_of(q), std::make_pair(s, sp));
    }
  }
  EXPECT_THROW(layout.qubit(3, Spin::kUp), std::out_of_range);
}

TEST(HubbardTerms, TwoSiteKineticHasFourTerms) {
  const auto t = hubbard_terms(build_lattice(LatticeKind::kChain, 2), 1.0, 4.0);
  EXPECT_EQ(t.kinetic.size(), 4u);
  for (const char* s : {"XXII", "YYII", "IIXX", "IIYY"}) {
    EXPECT_NEAR(std::abs(t.kinetic.coefficient(s) - Complex{-0.5, 0.0}), 0.0, 1e-15) << s;
  }
}

TEST(HubbardTerms, TwoSiteInteraction) {
  const auto t = hubbard_terms(build_lattice(LatticeKind::kChain, 2), 1.0, 4.0);
  EXPECT_EQ(t.interaction.size(), 2u);
  EXPECT_NEAR(t.interaction.coefficient("ZIZI").real(), 0.25, 1e-15);
  EXPECT_NEAR(t.interaction.coefficient("IZIZ").real(), 0.25, 1e-15);
}

TEST(HubbardTerms, ChainFourMatchesFermionicOperators) {
  const auto lat = build_lattice(LatticeKind::kChain, 4);
  const auto t = hubbard_terms(lat, 1.3, 2.0);
  const auto ref = testing::fermion_hubbard(lat, 1.3);
  EXPECT_LT((to_dense(t.kinetic) - ref.kinetic).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((to_dense(t.interaction) - ref.interaction).cwiseAbs().maxCoeff(), 1e-13);
  // Sites 2 and 3 are adjacent qubits inside a spin block: no Z string.
  EXPECT_NEAR(t.kinetic.coefficient("IXXIIIII").real(), -0.65, 1e-15);
  // No term touches both spin blocks.
  for (const auto& term : t.kinetic.terms()) {
    bool up = false;
    bool dn = false;
    for (int q = 0; q < 8; ++q) {
      if (term.ops[static_cast<std::size_t>(q)] != Pauli::kI) (q < 4 ? up : dn) = true;
    }
    EXPECT_FALSE(up && dn) << term.op_string();
  }
}

TEST(HubbardTerms, LadderMatchesFermionicOperatorsWithStrings) {
  const auto lat = build_lattice(LatticeKind::kLadder, 4);
  const auto t = hubbard_terms(lat, 1.0, 1.0);
  const auto ref = testing::fermion_hubbard(lat, 1.0);
  EXPECT_LT((to_dense(t.kinetic) - ref.kinetic).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(HubbardTerms, HermitianAndNumberConserving) {
  for (const auto& lat : {build_lattice(LatticeKind::kChain, 4),
                          build_lattice(LatticeKind::kLadder, 4)}) {
    const auto t = hubbard_terms(lat, 1.0, 3.0);
    const Dense k = to_dense(t.kinetic);
    const Dense d = to_dense(t.interaction);
    EXPECT_LT((k - k.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((d - d.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    Dense n = Dense::Zero(k.rows(), k.cols());
    const QubitLayout layout(lat.n_sites);
    for (int s = 0; s < lat.n_sites; ++s) {
      for (Spin sp : {Spin::kUp, Spin::kDown}) n += to_dense(number_operator_term(layout, s, sp));
    }
    EXPECT_LT((k * n - n * k).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((d * n - n * d).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(HubbardTerms, TwelveQubitOperatorsAreHermitian) {
  const auto t = hubbard_terms(build_lattice(LatticeKind::kChain, 6), 1.0, 1.0);
  const Dense k = to_dense(t.kinetic);
  EXPECT_LT((k - k.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(HubbardTerms, RejectsBadCouplings) {
  const auto lat = build_lattice(LatticeKind::kChain, 2);
  EXPECT_THROW(hubbard_terms(lat, 1.0, -1.0), std::invalid_argument);
  EXPECT_THROW(hubbard_terms(lat, 0.0, 1.0), std::invalid_argument);
}

TEST(NumberOperator, FormulaAndExpectations) {
  const QubitLayout layout(1);
  const auto n = number_operator_term(layout, 0, Spin::kUp);
  EXPECT_NEAR(n.coefficient("II").real(), 0.5, 1e-15);
  EXPECT_NEAR(n.coefficient("ZI").real(), -0.5, 1e-15);
  EXPECT_NEAR(expectation(StateVector::basis(2, 0b10), n).real(), 1.0, 1e-15);
  EXPECT_NEAR(expectation(StateVector::basis(2, 0b00), n).real(), 0.0, 1e-15);
  EXPECT_THROW(number_operator_term(layout, 1, Spin::kUp), std::out_of_range);
}

TEST(ModelJson, RoundTrip) {
  const auto lat = build_lattice(LatticeKind::kLadder, 8);
  double J = 0;
  double U = 0;
  const auto back = lattice_from_json(model_to_json(lat, 1.5, 3.0), &J, &U);
  EXPECT_EQ(back.edges, lat.edges);
  EXPECT_EQ(back.kind, lat.kind);
  EXPECT_DOUBLE_EQ(J, 1.5);
  EXPECT_DOUBLE_EQ(U, 3.0);
}

}  // namespace
}  // namespace gutzlcu
