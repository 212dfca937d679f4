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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gutzlcu/pauli.h"

namespace gutzlcu {

enum class HsRegime { kNegativeJ, kPositiveJ };

/// Two-qubit generator family; the sign is fixed by the regime:
/// kHopping is (XX +- YY)/2, kCurrent is (XY -+ YX)/2, kZ is (Z_j -+ Z_i)/2
/// with the upper sign for J < 0.
enum class HsChannel { kHopping, kCurrent, kZ };

struct HsVariant {
  HsRegime regime = HsRegime::kPositiveJ;
  HsChannel channel = HsChannel::kZ;
  PauliSum generator{2};
  double gamma = 0.5;
  double alpha = 0.0;

  /// e.g. "XX+YY", "XY-YX", "Zj-Zi".
  std::string name() const;
};

std::string to_string(HsRegime regime);

/// Generator of a channel in a regime, on qubits (i, j) = (0, 1).
PauliSum hs_generator(HsRegime regime, HsChannel channel);

/// The three decompositions of exp(-J Z_i Z_j) for the sign of J; J = 0
/// yields alpha = 0, gamma = 1/2 with the J > 0 generators.
std::vector<HsVariant> decompose_zz(double J);

/// diag(e^{-J}, e^{J}, e^{J}, e^{-J}) in the basis |00>, |01>, |10>, |11>.
Eigen::Matrix4cd zz_matrix(double J);

/// exp(-i theta G) for a generator with G^3 = G, via
/// I + (cos theta - 1) G^2 - i sin theta G.
Eigen::Matrix4cd generator_exp(const PauliSum& generator, double theta);

/// Same exponential by Hermitian eigendecomposition.
Eigen::Matrix4cd generator_exp_dense(const PauliSum& generator, double theta);

/// gamma * sum_{s = +-1} exp(-i s alpha G).
Eigen::Matrix4cd hs_rhs(const PauliSum& generator, double gamma, double alpha,
                        bool dense = false);

/// max |zz_matrix(J) - hs_rhs(variant)| elementwise.
double verify_variant(const HsVariant& variant, double J, bool dense = false);

}  // namespace gutzlcu
