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

#include "gutzlcu/lattice.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace gutzlcu {

std::string to_string(LatticeKind kind) {
  return kind == LatticeKind::kChain ? "chain" : "ladder";
}

LatticeKind parse_lattice_kind(const std::string& name) {
  if (name == "chain") return LatticeKind::kChain;
  if (name == "ladder") return LatticeKind::kLadder;
  throw std::invalid_argument("unsupported lattice kind '" + name + "'");
}

Lattice build_lattice(LatticeKind kind, int n_sites) {
  if (n_sites < 2) {
    throw std::invalid_argument("lattice needs at least 2 sites, got " +
                                std::to_string(n_sites));
  }
  Lattice lat;
  lat.kind = kind;
  lat.n_sites = n_sites;
  lat.sublattice.resize(n_sites);
  if (kind == LatticeKind::kChain) {
    for (int i = 0; i + 1 < n_sites; ++i) lat.edges.emplace_back(i, i + 1);
    for (int i = 0; i < n_sites; ++i) lat.sublattice[i] = (i % 2 == 0) ? 1 : -1;
    return lat;
  }
  if (n_sites % 2 != 0) {
    throw std::invalid_argument("ladder needs an even number of sites, got " +
                                std::to_string(n_sites));
  }
  // Snake numbering: leg A holds sites 0..L-1 at x = 0..L-1, leg B holds
  // sites L..2L-1 at x = L-1..0.
  const int L = n_sites / 2;
  auto x_of = [L](int site) { return site < L ? site : 2 * L - 1 - site; };
  auto y_of = [L](int site) { return site < L ? 0 : 1; };
  for (int i = 0; i + 1 < L; ++i) lat.edges.emplace_back(i, i + 1);
  for (int i = L; i + 1 < 2 * L; ++i) lat.edges.emplace_back(i, i + 1);
  for (int x = 0; x < L; ++x) {
    const int a = x;
    const int b = 2 * L - 1 - x;
    lat.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(lat.edges.begin(), lat.edges.end());
  for (int i = 0; i < n_sites; ++i) {
    lat.sublattice[i] = ((x_of(i) + y_of(i)) % 2 == 0) ? 1 : -1;
  }
  return lat;
}

Lattice parse_lattice(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("lattice spec must look like chain:N or ladder:N, got '" +
                                spec + "'");
  }
  const auto kind = parse_lattice_kind(spec.substr(0, colon));
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(spec.substr(colon + 1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad site count in lattice spec '" + spec + "'");
  }
  if (used != spec.size() - colon - 1) {
    throw std::invalid_argument("bad site count in lattice spec '" + spec + "'");
  }
  return build_lattice(kind, n);
}

void validate(const Lattice& lattice) {
  const int n = lattice.n_sites;
  if (n < 1) throw std::invalid_argument("lattice has no sites");
  if (static_cast<int>(lattice.sublattice.size()) != n) {
    throw std::invalid_argument("sublattice labels do not match site count");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : lattice.edges) {
    if (i < 0 || j >= n || i >= j) {
      throw std::invalid_argument("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") is not an ordered pair of valid sites");
    }
    if (!seen.insert({i, j}).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
    }
    if (lattice.sublattice[i] == lattice.sublattice[j]) {
      throw std::invalid_argument("sublattice labels are not a 2-coloring");
    }
  }
  for (int s : lattice.sublattice) {
    if (s != 1 && s != -1) throw std::invalid_argument("sublattice label must be +-1");
  }
}

std::vector<std::vector<double>> hopping_matrix(const Lattice& lattice, double J) {
  std::vector<std::vector<double>> h(lattice.n_sites,
                                     std::vector<double>(lattice.n_sites, 0.0));
  for (auto [i, j] : lattice.edges) {
    h[i][j] = -J;
    h[j][i] = -J;
  }
  return h;
}

QubitLayout::QubitLayout(int n_sites) : n_sites_(n_sites) {
  if (n_sites < 1) throw std::invalid_argument("layout needs at least one site");
}

int QubitLayout::qubit(int site, Spin spin) const {
  if (site < 0 || site >= n_sites_) {
    throw std::out_of_range("site " + std::to_string(site) + " outside [0, " +
                            std::to_string(n_sites_) + ")");
  }
  return spin == Spin::kUp ? site : n_sites_ + site;
}

std::pair<int, Spin> QubitLayout::site_of(int qubit) const {
  if (qubit < 0 || qubit >= 2 * n_sites_) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
  }
  return qubit < n_sites_ ? std::pair{qubit, Spin::kUp}
                          : std::pair{qubit - n_sites_, Spin::kDown};
}

HubbardTerms hubbard_terms(const Lattice& lattice, double J, double U) {
  if (!(J > 0.0) || !std::isfinite(J)) {
    throw std::invalid_argument("hopping J must be positive and finite");
  }
  if (!(U >= 0.0) || !std::isfinite(U)) {
    throw std::invalid_argument("interaction U must be non-negative and finite");
  }
  validate(lattice);
  const QubitLayout layout(lattice.n_sites);
  const int nq = layout.n_qubits();
  HubbardTerms out{PauliSum(nq), PauliSum(nq)};
  for (Spin spin : {Spin::kUp, Spin::kDown}) {
    for (auto [i, j] : lattice.edges) {
      const int qa = layout.qubit(i, spin);
      const int qb = layout.qubit(j, spin);
      for (char p : {'X', 'Y'}) {
        std::string ops(nq, 'I');
        ops[qa] = p;
        ops[qb] = p;
        for (int k = qa + 1; k < qb; ++k) ops[k] = 'Z';
        out.kinetic.add(-0.5 * J, ops);
      }
    }
  }
  for (int i = 0; i < lattice.n_sites; ++i) {
    std::string ops(nq, 'I');
    ops[layout.qubit(i, Spin::kUp)] = 'Z';
    ops[layout.qubit(i, Spin::kDown)] = 'Z';
    out.interaction.add(0.25, ops);
  }
  return out;
}

PauliSum number_operator_term(const QubitLayout& layout, int site, Spin spin) {
  const int q = layout.qubit(site, spin);
  PauliSum n(layout.n_qubits());
  n.add(0.5, std::string(layout.n_qubits(), 'I'));
  std::string z(layout.n_qubits(), 'I');
  z[q] = 'Z';
  n.add(-0.5, z);
  return n;
}

std::string model_to_json(const Lattice& lattice, double J, double U) {
  nlohmann::json j;
  j["kind"] = to_string(lattice.kind);
  j["n_sites"] = lattice.n_sites;
  j["J"] = J;
  j["U"] = U;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : lattice.edges) edges.push_back({a, b});
  j["edges"] = edges;
  return j.dump();
}

Lattice lattice_from_json(const std::string& text, double* J, double* U) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("model JSON: ") + e.what());
  }
  const auto lat = build_lattice(parse_lattice_kind(j.at("kind").get<std::string>()),
                                 j.at("n_sites").get<int>());
  if (j.contains("edges")) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::sort(edges.begin(), edges.end());
    if (edges != lat.edges) {
      throw std::invalid_argument("model JSON edge list does not match its lattice kind");
    }
  }
  if (J != nullptr) *J = j.value("J", 1.0);
  if (U != nullptr) *U = j.value("U", 0.0);
  return lat;
}

}  // namespace gutzlcu
