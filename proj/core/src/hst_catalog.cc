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

#include "gutzlcu/hst_catalog.h"

#include <cmath>

#include "gutzlcu/statevector.h"

namespace gutzlcu {
namespace {

Eigen::Matrix4cd to_matrix(const PauliSum& op) {
  if (op.n_qubits() != 2) throw std::invalid_argument("generator must act on two qubits");
  const auto dense = dense_matrix(op);
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = dense[static_cast<std::size_t>(4 * r + c)];
  }
  return m;
}

}  // namespace

std::string to_string(HsRegime regime) {
  return regime == HsRegime::kNegativeJ ? "J<0" : "J>0";
}

std::string HsVariant::name() const {
  const bool neg = regime == HsRegime::kNegativeJ;
  switch (channel) {
    case HsChannel::kHopping:
      return neg ? "XX+YY" : "XX-YY";
    case HsChannel::kCurrent:
      return neg ? "XY-YX" : "XY+YX";
    case HsChannel::kZ:
      return neg ? "Zj-Zi" : "Zj+Zi";
  }
  return "?";
}

PauliSum hs_generator(HsRegime regime, HsChannel channel) {
  const double sign = regime == HsRegime::kNegativeJ ? 1.0 : -1.0;
  PauliSum g(2);
  switch (channel) {
    case HsChannel::kHopping:
      g.add(0.5, "XX");
      g.add(0.5 * sign, "YY");
      break;
    case HsChannel::kCurrent:
      g.add(0.5, "XY");
      g.add(-0.5 * sign, "YX");
      break;
    case HsChannel::kZ:
      g.add(0.5, "IZ");
      g.add(-0.5 * sign, "ZI");
      break;
  }
  return g;
}

std::vector<HsVariant> decompose_zz(double J) {
  if (!std::isfinite(J)) throw std::invalid_argument("J must be finite");
  const HsRegime regime = J < 0.0 ? HsRegime::kNegativeJ : HsRegime::kPositiveJ;
  const double a = std::abs(J);
  std::vector<HsVariant> out;
  for (HsChannel ch : {HsChannel::kHopping, HsChannel::kCurrent, HsChannel::kZ}) {
    HsVariant v;
    v.regime = regime;
    v.channel = ch;
    v.generator = hs_generator(regime, ch);
    v.gamma = std::exp(a) / 2;
    v.alpha = std::acos(std::exp(-2 * a));
    out.push_back(std::move(v));
  }
  return out;
}

Eigen::Matrix4cd zz_matrix(double J) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(3, 3) = std::exp(-J);
  m(1, 1) = m(2, 2) = std::exp(J);
  return m;
}

Eigen::Matrix4cd generator_exp(const PauliSum& generator, double theta) {
  const Eigen::Matrix4cd g = to_matrix(generator);
  const Complex i{0.0, 1.0};
  return Eigen::Matrix4cd::Identity() + (std::cos(theta) - 1.0) * (g * g) -
         i * std::sin(theta) * g;
}

Eigen::Matrix4cd generator_exp_dense(const PauliSum& generator, double theta) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(to_matrix(generator));
  const Complex i{0.0, 1.0};
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::exp(-i * theta * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::Matrix4cd hs_rhs(const PauliSum& generator, double gamma, double alpha, bool dense) {
  auto ex = [&](double t) {
    return dense ? generator_exp_dense(generator, t) : generator_exp(generator, t);
  };
  return gamma * (ex(alpha) + ex(-alpha));
}

double verify_variant(const HsVariant& variant, double J, bool dense) {
  return (zz_matrix(J) - hs_rhs(variant.generator, variant.gamma, variant.alpha, dense))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace gutzlcu
