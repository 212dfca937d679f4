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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gutzlcu {

using Complex = std::complex<double>;

inline constexpr const char* kVersion = GUTZLCU_VERSION;

/// Raised when an eigensolver exhausts its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The trial state's Fermi level sits inside a degenerate single-particle
/// level, so the ground state of the hopping term is not unique.
class DegenerateFillingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Monte Carlo weight came out complex or negative beyond tolerance.
class PhaseProblemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Overlap matrix too ill-conditioned for a reliable Green's function.
class SingularOverlapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Spin : int { kUp = 0, kDown = 1 };

}  // namespace gutzlcu
