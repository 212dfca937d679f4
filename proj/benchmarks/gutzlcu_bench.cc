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

#include <random>

#include <benchmark/benchmark.h>

#include "gutzlcu/gutzwiller.h"
#include "gutzlcu/lcu.h"
#include "gutzlcu/mc.h"
#include "gutzlcu/statevector.h"

namespace gutzlcu {
namespace {

void BM_RzLayer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s(n);
  for (auto _ : state) {
    for (int q = 0; q < n; ++q) apply_gate(s, Gate::rz(q, 0.3));
    benchmark::DoNotOptimize(s[0]);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_RzLayer)->Arg(12)->Arg(16)->Arg(20);

void BM_CnotLayer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s(n);
  apply_gate(s, Gate::h(0));
  for (auto _ : state) {
    for (int q = 0; q + 1 < n; ++q) apply_gate(s, Gate::cnot(q, q + 1));
    benchmark::DoNotOptimize(s[0]);
  }
}
BENCHMARK(BM_CnotLayer)->Arg(12)->Arg(16)->Arg(20);

void BM_KineticExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lat = build_lattice(LatticeKind::kChain, n);
  const auto s = ground_state_of_K(lat, n / 2);
  const auto psi = slater_to_statevector(s, s, QubitLayout(n));
  const auto k = hubbard_terms(lat, 1.0, 0.0).kinetic;
  for (auto _ : state) benchmark::DoNotOptimize(expectation(psi, k));
}
BENCHMARK(BM_KineticExpectation)->Arg(4)->Arg(8)->Arg(10);

void BM_DressedOverlap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = ground_state_of_K(build_lattice(LatticeKind::kChain, n), n / 2);
  std::mt19937_64 rng(1);
  const auto c = AuxFieldConfig::from_index(n, rng() & ((std::uint64_t{1} << (2 * n)) - 1));
  const double alpha = hs_params(1.0).alpha;
  const auto p = field_phases(c, 2, alpha) * field_phases(c, 1, alpha);
  for (auto _ : state) benchmark::DoNotOptimize(dressed_overlap(s, p));
}
BENCHMARK(BM_DressedOverlap)->Arg(4)->Arg(8)->Arg(12);

void BM_MetropolisSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lat = build_lattice(LatticeKind::kChain, n);
  const FieldModel model(lat, 1.0, half_filled_trial(lat), 0.8);
  auto chain = init_chain(model, Backend::kDeterminant);
  McRng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(metropolis_sweep(chain, model, Backend::kDeterminant, rng));
}
BENCHMARK(BM_MetropolisSweep)->Arg(4)->Arg(10)->Arg(12);

void BM_LocalEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lat = build_lattice(LatticeKind::kChain, n);
  const FieldModel model(lat, 1.0, half_filled_trial(lat), 0.8);
  const auto c = AuxFieldConfig::from_index(n, 0x5a5);
  for (auto _ : state) benchmark::DoNotOptimize(local_energy(c, model, Backend::kDeterminant));
}
BENCHMARK(BM_LocalEnergy)->Arg(4)->Arg(10)->Arg(12);

void BM_LcuCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lat = build_lattice(LatticeKind::kChain, n);
  const auto s = ground_state_of_K(lat, n / 2);
  const auto psi = slater_to_statevector(s, s, QubitLayout(n));
  for (auto _ : state) benchmark::DoNotOptimize(build_lcu_state(psi, 0.7));
}
BENCHMARK(BM_LcuCircuit)->Arg(2)->Arg(4)->Arg(6);

}  // namespace
}  // namespace gutzlcu

BENCHMARK_MAIN();
