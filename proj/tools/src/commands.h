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

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gutzlcu::cli {

/// Bad user input; the CLI exits with status 1.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string lattice = "chain:4";
  double J = 1.0;
  std::vector<double> U;  // empty: command default
  double g_min = 0.0;
  double g_max = 2.0;
  double g_step = 0.1;
  int nmc = 20000;
  int bins = 20;
  int burnin = -1;
  int chains = 1;
  std::uint64_t seed = 1;
  std::string backend = "determinant";
  long shots = 8192;
  int reps = 16;
  std::vector<double> bias;  // scale[,phase[,phase_drift]]
  bool pas = true;
  std::string methods = "auto";
  std::vector<int> sizes;       // lcu: chain lengths
  std::vector<double> j_values;  // hst-verify
  std::vector<double> g_values;  // phase-check
  int down_particles = -1;       // phase-check: spin-down filling override
  std::string out;
  unsigned workers = 0;

  nlohmann::json to_json() const;
};

/// Result of one command: CSV text, metadata, and whether its checks passed.
struct CommandOutput {
  std::string csv;
  nlohmann::json meta;
  bool checks_passed = true;
  std::vector<std::string> warnings;
};

CommandOutput cmd_two_site(const RunConfig& config);
CommandOutput cmd_sweep(const RunConfig& config);
CommandOutput cmd_lcu(const RunConfig& config);
CommandOutput cmd_mc(const RunConfig& config);
CommandOutput cmd_hst_verify(const RunConfig& config);
CommandOutput cmd_phase_check(const RunConfig& config);

CommandOutput run_command(const RunConfig& config);

/// %.17g formatting used for every CSV number.
std::string format_double(double v);

/// Parses args (without the program name), runs the command, writes the CSV
/// to --out (plus a .json sidecar) or to `out`. Returns the exit status:
/// 0 success, 1 usage or config error, 2 numerical check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gutzlcu::cli
