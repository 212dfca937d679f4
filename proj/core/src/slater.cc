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

#include "gutzlcu/slater.h"

#include <bit>
#include <cmath>

namespace gutzlcu {

namespace {

constexpr double kFermiGapTolerance = 1e-8;

Eigen::MatrixXcd scaled_rows(const Eigen::MatrixXcd& phi, const std::vector<Complex>& d) {
  Eigen::MatrixXcd out = phi;
  for (Eigen::Index i = 0; i < phi.rows(); ++i) out.row(i) *= d[static_cast<std::size_t>(i)];
  return out;
}

void check_phases(const SlaterState& slater, const FieldPhases& phases) {
  if (static_cast<int>(phases.diag.size()) != slater.n_sites()) {
    throw std::invalid_argument("field phases cover " + std::to_string(phases.diag.size()) +
                                " sites, Slater state has " + std::to_string(slater.n_sites()));
  }
}

}  // namespace

SingleParticleSpectrum single_particle_spectrum(const Lattice& lattice, double J) {
  validate(lattice);
  const auto h = hopping_matrix(lattice, J);
  Eigen::MatrixXd m(lattice.n_sites, lattice.n_sites);
  for (int i = 0; i < lattice.n_sites; ++i) {
    for (int j = 0; j < lattice.n_sites; ++j) m(i, j) = h[i][j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SlaterState ground_state_of_K(const Lattice& lattice, int n_particles) {
  if (n_particles <= 0 || n_particles > lattice.n_sites) {
    throw std::invalid_argument("particle count " + std::to_string(n_particles) +
                                " outside (0, " + std::to_string(lattice.n_sites) + "]");
  }
  const auto spectrum = single_particle_spectrum(lattice, 1.0);
  if (n_particles < lattice.n_sites) {
    const double gap = spectrum.energies[n_particles] - spectrum.energies[n_particles - 1];
    if (gap < kFermiGapTolerance) {
      throw DegenerateFillingError("Fermi level of " + std::to_string(n_particles) +
                                   " particles on " + std::to_string(lattice.n_sites) +
                                   " sites sits in a degenerate level (gap " +
                                   std::to_string(gap) + ")");
    }
  }
  SlaterState out;
  out.phi.resize(lattice.n_sites, n_particles);
  for (int k = 0; k < n_particles; ++k) {
    Eigen::VectorXd orb = spectrum.orbitals.col(k);
    const double largest = orb.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < orb.size(); ++i) {
      if (std::abs(orb[i]) >= largest - 1e-12) {
        if (orb[i] < 0) orb = -orb;
        break;
      }
    }
    out.phi.col(k) = orb.cast<Complex>();
  }
  return out;
}

FieldPhases operator*(const FieldPhases& a, const FieldPhases& b) {
  if (a.diag.size() != b.diag.size()) throw std::invalid_argument("field phase size mismatch");
  FieldPhases out;
  out.diag.resize(a.diag.size());
  for (std::size_t i = 0; i < a.diag.size(); ++i) out.diag[i] = a.diag[i] * b.diag[i];
  out.scalar = a.scalar * b.scalar;
  return out;
}

FieldPhases FieldPhases::adjoint() const {
  FieldPhases out;
  out.diag.reserve(diag.size());
  for (const auto& d : diag) out.diag.push_back(std::conj(d));
  out.scalar = std::conj(scalar);
  return out;
}

FieldPhases FieldPhases::identity(int n_sites) {
  FieldPhases out;
  out.diag.assign(static_cast<std::size_t>(n_sites), Complex{1.0, 0.0});
  return out;
}

DressedOverlap dressed_overlap(const SlaterState& slater, const FieldPhases& phases) {
  check_phases(slater, phases);
  DressedOverlap out;
  if (slater.n_particles() == 0) {
    out.value = phases.scalar;
    out.log_magnitude = std::log(std::abs(phases.scalar));
    return out;
  }
  const Eigen::MatrixXcd m = slater.phi.adjoint() * scaled_rows(slater.phi, phases.diag);
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  double log_mag = std::log(std::abs(phases.scalar));
  for (Eigen::Index k = 0; k < m.rows(); ++k) log_mag += std::log(std::abs(lu.matrixLU()(k, k)));
  out.value = phases.scalar * lu.determinant();
  out.log_magnitude = log_mag;
  out.rcond = lu.rcond();
  if (!std::isfinite(out.rcond)) out.rcond = 0.0;
  return out;
}

Eigen::MatrixXcd dressed_green(const SlaterState& slater, const FieldPhases& bra,
                               const FieldPhases& ket) {
  check_phases(slater, bra);
  check_phases(slater, ket);
  const Eigen::MatrixXcd right = scaled_rows(slater.phi, ket.diag);
  // L^dag = phi^dag diag(bra), since <L| = <phi| U_bra.
  Eigen::MatrixXcd left_dag = slater.phi.adjoint();
  for (Eigen::Index i = 0; i < left_dag.cols(); ++i) {
    left_dag.col(i) *= bra.diag[static_cast<std::size_t>(i)];
  }
  const Eigen::MatrixXcd overlap = left_dag * right;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(overlap);
  const double rcond = lu.rcond();
  if (!(rcond * kMaxOverlapCondition >= 1.0)) {
    throw SingularOverlapError("dressed overlap matrix condition estimate exceeds 1e12");
  }
  // <c_a^dag c_b> = [R (L^dag R)^{-1} L^dag]_{ba}
  const Eigen::MatrixXcd g_t = right * lu.solve(left_dag);
  return g_t.transpose();
}

Complex dressed_one_body(const SlaterState& slater, const FieldPhases& bra,
                         const FieldPhases& ket, const Eigen::MatrixXcd& one_body) {
  if (one_body.rows() != slater.n_sites() || one_body.cols() != slater.n_sites()) {
    throw std::invalid_argument("one-body matrix must be n_sites x n_sites");
  }
  const auto g = dressed_green(slater, bra, ket);
  return one_body.cwiseProduct(g).sum();
}

SectorAmplitudes sector_amplitudes(const SlaterState& slater) {
  const int n = slater.n_sites();
  const int p = slater.n_particles();
  if (n > 30) throw std::invalid_argument("sector amplitudes limited to 30 sites");
  SectorAmplitudes out;
  out.n_sites = n;
  std::vector<Eigen::Index> rows(static_cast<std::size_t>(p));
  Eigen::MatrixXcd minor(p, p);
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    if (std::popcount(mask) != p) continue;
    int r = 0;
    for (int site = 0; site < n; ++site) {
      if (mask & (std::uint64_t{1} << (n - 1 - site))) rows[static_cast<std::size_t>(r++)] = site;
    }
    Complex amp{1.0, 0.0};
    if (p > 0) {
      for (int a = 0; a < p; ++a) minor.row(a) = slater.phi.row(rows[static_cast<std::size_t>(a)]);
      amp = minor.determinant();
    }
    if (std::abs(amp) > 0.0) out.entries.emplace_back(mask, amp);
  }
  return out;
}

StateVector sector_to_statevector(const SlaterState& slater) {
  const auto amps = sector_amplitudes(slater);
  StateVector out(slater.n_sites());
  out[0] = 0.0;
  for (const auto& [mask, a] : amps.entries) out[mask] = a;
  out.normalize();
  return out;
}

StateVector slater_to_statevector(const SlaterState& up, const SlaterState& down,
                                  const QubitLayout& layout) {
  const int n = layout.n_sites();
  if (up.n_sites() != n || down.n_sites() != n) {
    throw std::invalid_argument("Slater states do not match the layout's site count");
  }
  const auto a = sector_amplitudes(up);
  const auto b = sector_amplitudes(down);
  StateVector out(layout.n_qubits());
  out[0] = 0.0;
  for (const auto& [mu, au] : a.entries) {
    for (const auto& [md, ad] : b.entries) out[(mu << n) | md] = au * ad;
  }
  out.normalize();
  return out;
}

}  // namespace gutzlcu
