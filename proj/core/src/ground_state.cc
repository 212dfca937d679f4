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

#include "gutzlcu/ground_state.h"

#include <array>
#include <bit>
#include <cmath>
#include <algorithm>
#include <random>

#include <Eigen/Dense>

namespace gutzlcu {

namespace {

struct CompiledTerm {
  std::uint64_t z_mask;
  Complex coefficient;  // includes i^{n_y}
};

// Terms sharing one bit-flip pattern; their amplitudes are summed before
// the sector lookup, so XX + YY pairs cancel their number-changing parts.
struct FlipGroup {
  std::uint64_t x_mask;
  std::vector<CompiledTerm> terms;
};

// H restricted to a basis of computational states closed under H.
class SectorOperator {
 public:
  SectorOperator(const PauliSum& h, int n_qubits, std::optional<ParticleSector> sector)
      : n_qubits_(n_qubits) {
    static constexpr std::array<Complex, 4> kIPow = {Complex{1, 0}, Complex{0, 1},
                                                     Complex{-1, 0}, Complex{0, -1}};
    for (const auto& t : h.terms()) {
      const auto m = masks_of(t.ops);
      auto it = std::find_if(groups_.begin(), groups_.end(),
                             [&](const FlipGroup& g) { return g.x_mask == m.x_mask; });
      if (it == groups_.end()) {
        groups_.push_back({m.x_mask, {}});
        it = groups_.end() - 1;
      }
      it->terms.push_back({m.z_mask, t.coefficient * kIPow[m.n_y % 4]});
    }
    const std::uint64_t full = std::uint64_t{1} << n_qubits;
    if (!sector) {
      basis_.resize(full);
      for (std::uint64_t b = 0; b < full; ++b) basis_[b] = b;
      identity_basis_ = true;
      return;
    }
    if (n_qubits % 2 != 0) throw std::invalid_argument("sector restriction needs an even qubit count");
    const int n_sites = n_qubits / 2;
    const std::uint64_t half = std::uint64_t{1} << n_sites;
    std::vector<std::uint64_t> ups, downs;
    for (std::uint64_t m = 0; m < half; ++m) {
      if (std::popcount(m) == sector->n_up) ups.push_back(m);
      if (std::popcount(m) == sector->n_down) downs.push_back(m);
    }
    for (auto u : ups) {
      for (auto d : downs) basis_.push_back((u << n_sites) | d);
    }
    if (basis_.empty()) throw std::invalid_argument("empty particle sector");
    position_.assign(full, -1);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      position_[basis_[k]] = static_cast<std::int32_t>(k);
    }
  }

  std::size_t dim() const { return basis_.size(); }

  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    out.setZero(in.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const Complex v = in[static_cast<Eigen::Index>(j)];
      if (v == Complex{}) continue;
      const std::uint64_t b = basis_[j];
      for (const auto& grp : groups_) {
        Complex c{};
        for (const auto& t : grp.terms) {
          c += (std::popcount(b & t.z_mask) & 1) ? -t.coefficient : t.coefficient;
        }
        if (std::abs(c) <= 1e-14) continue;
        const std::uint64_t target = b ^ grp.x_mask;
        std::int64_t pos;
        if (identity_basis_) {
          pos = static_cast<std::int64_t>(target);
        } else {
          pos = position_[target];
          if (pos < 0) {
            throw std::invalid_argument("Hamiltonian does not conserve the requested sector");
          }
        }
        out[pos] += c * v;
      }
    }
  }

  StateVector expand(const Eigen::VectorXcd& v) const {
    std::vector<Complex> amps(std::size_t{1} << n_qubits_);
    for (std::size_t j = 0; j < basis_.size(); ++j) amps[basis_[j]] = v[static_cast<Eigen::Index>(j)];
    return StateVector(n_qubits_, std::move(amps));
  }

 private:
  int n_qubits_;
  bool identity_basis_ = false;
  std::vector<FlipGroup> groups_;
  std::vector<std::uint64_t> basis_;
  std::vector<std::int32_t> position_;
};

void orthogonalize(Eigen::VectorXcd& w, const std::vector<Eigen::VectorXcd>& against) {
  for (const auto& q : against) w -= q.dot(w) * q;
}

struct LanczosOutcome {
  double energy;
  Eigen::VectorXcd vector;
  double residual;
  int iterations;
  bool converged;
};

LanczosOutcome lowest_eigenpair(const SectorOperator& op,
                                const std::vector<Eigen::VectorXcd>& deflate,
                                const GroundStateOptions& options, std::mt19937_64& rng) {
  const auto dim = static_cast<Eigen::Index>(op.dim());
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) v[k] = Complex{normal(rng), normal(rng)};
  orthogonalize(v, deflate);
  orthogonalize(v, deflate);
  v.normalize();

  const int m_max = static_cast<int>(std::min<Eigen::Index>(options.krylov_dim, dim));
  LanczosOutcome best{0.0, v, INFINITY, 0, false};
  Eigen::VectorXcd w(dim), hv(dim);
  int total_iterations = 0;
  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    std::vector<Eigen::VectorXcd> basis{v};
    std::vector<double> alpha, beta;
    for (int k = 0; k < m_max; ++k) {
      op.apply(basis[k], w);
      ++total_iterations;
      const double a = basis[k].dot(w).real();
      alpha.push_back(a);
      // Two rounds of full reorthogonalization keep the basis orthonormal to
      // working precision.
      for (int round = 0; round < 2; ++round) {
        orthogonalize(w, basis);
        orthogonalize(w, deflate);
      }
      const double b = w.norm();
      if (k + 1 == m_max || b < 1e-13) break;
      beta.push_back(b);
      basis.push_back(w / b);
    }
    const int kk = static_cast<int>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), kk);
    Eigen::VectorXd sub = kk > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), kk - 1))
                                 : Eigen::VectorXd(0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(dim);
    for (int k = 0; k < kk; ++k) x += tri.eigenvectors()(k, 0) * basis[k];
    orthogonalize(x, deflate);
    x.normalize();
    op.apply(x, hv);
    const double energy = x.dot(hv).real();
    const double residual = (hv - energy * x).norm();
    best = {energy, x, residual, total_iterations, false};
    if (residual <= options.tolerance * std::max(std::abs(energy), 1.0)) {
      best.converged = true;
      return best;
    }
    v = x;
  }
  return best;
}

}  // namespace

GroundStateResult exact_ground_state(const PauliSum& hamiltonian, int n_qubits,
                                     std::optional<ParticleSector> sector,
                                     const GroundStateOptions& options) {
  if (n_qubits > 24) throw std::invalid_argument("exact ground state limited to 24 qubits");
  if (hamiltonian.n_qubits() != n_qubits) {
    throw std::invalid_argument("Hamiltonian qubit count does not match");
  }
  const SectorOperator op(hamiltonian, n_qubits, sector);
  std::mt19937_64 rng(options.seed);
  const auto ground = lowest_eigenpair(op, {}, options, rng);
  if (!ground.converged) {
    throw ConvergenceError("Lanczos did not reach relative residual " +
                           std::to_string(options.tolerance) + " (residual " +
                           std::to_string(ground.residual) + ")");
  }
  GroundStateResult result;
  result.energy = ground.energy;
  result.residual = ground.residual;
  result.iterations = ground.iterations;
  result.state = op.expand(ground.vector);

  std::vector<Eigen::VectorXcd> found{ground.vector};
  while (result.degeneracy < options.max_degeneracy_probe &&
         static_cast<std::size_t>(found.size()) < op.dim()) {
    const auto next = lowest_eigenpair(op, found, options, rng);
    // A non-converged Ritz value is still an upper bound on the next level.
    if (next.energy - ground.energy >= options.degeneracy_gap) break;
    ++result.degeneracy;
    found.push_back(next.vector);
  }
  return result;
}

}  // namespace gutzlcu
