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

#include <cctype>
#include <fstream>
#include <set>

#include "CLI11.hpp"
#include "commands.h"
#include "gutzlcu/common.h"

namespace gutzlcu::cli {
namespace {

std::string env_name(std::string flag) {
  for (auto& ch : flag) ch = ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
  return "GUTZ_" + flag;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// The flat key = value format: blank lines and '#' comments are skipped,
// every other line must name a known option.
void prescan_config(const std::string& path, const std::set<std::string>& known) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file '" + path + "' cannot be read");
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    const auto t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(no) + ": expected 'key = value'");
    }
    const auto key = trim(t.substr(0, eq));
    if (!known.count(key)) {
      throw ConfigError(path + ":" + std::to_string(no) + ": unknown key '" + key + "'");
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app("Gutzwiller factor as a linear combination of unitaries: simulation toolkit",
               "gutzlcu");
  app.set_version_flag("--version", std::string(kVersion));
  std::string config_path;
  std::set<std::string> known;
  auto opt = [&](const std::string& name, auto& target, const std::string& help) {
    known.insert(name);
    return app.add_option("--" + name, target, help)->envname(env_name(name));
  };
  opt("lattice", c.lattice, "chain:N or ladder:N");
  opt("J", c.J, "hopping amplitude (> 0)");
  opt("U", c.U, "interaction list u1,u2,...")->delimiter(',');
  opt("g-min", c.g_min, "grid start");
  opt("g-max", c.g_max, "grid end");
  opt("g-step", c.g_step, "grid step");
  opt("nmc", c.nmc, "Monte Carlo measurement sweeps");
  opt("bins", c.bins, "bins for error analysis");
  opt("burnin", c.burnin, "burn-in sweeps (< 0: max(10%, 500))");
  opt("chains", c.chains, "independent chains per point");
  opt("seed", c.seed, "master seed");
  opt("backend", c.backend, "statevector|determinant");
  opt("shots", c.shots, "shots per Hadamard-test part (0: exact only)");
  opt("reps", c.reps, "repetitions for shot statistics");
  opt("bias", c.bias, "synthetic bias scale[,phase[,drift]]")->delimiter(',');
  opt("pas", c.pas, "apply phase-and-scale correction to biased data");
  opt("methods", c.methods, "sweep methods: auto or mc,fullsum,exact-gutzwiller,ground");
  opt("sizes", c.sizes, "lcu chain lengths")->delimiter(',');
  opt("j-values", c.j_values, "hst-verify coupling list")->delimiter(',');
  opt("g-values", c.g_values, "phase-check g list")->delimiter(',');
  opt("down-particles", c.down_particles, "phase-check spin-down filling override");
  opt("out", c.out, "CSV path; a .json sidecar is written next to it");
  opt("workers", c.workers, "worker threads (0: available parallelism)");

  for (const char* name : {"two-site", "sweep", "lcu", "mc", "hst-verify", "phase-check"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.require_subcommand(1);

  try {
    // Config first, so that its diagnostics carry line numbers.
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] == "--config") config_path = args[i + 1];
    }
    if (!config_path.empty()) {
      prescan_config(config_path, known);
    }
    app.set_config("--config", config_path, "Flat key = value config file; flags override it");
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  }
  c.command = app.get_subcommands().front()->get_name();

  CommandOutput result;
  try {
    result = run_command(c);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  } catch (const PhaseProblemError& e) {
    err << "phase problem: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  for (const auto& w : result.warnings) err << "warning: " << w << '\n';
  if (c.out.empty()) {
    out << result.csv;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    std::ofstream m(c.out + ".json", std::ios::binary);
    if (!f || !m) {
      err << "config error: cannot write '" << c.out << "'\n";
      return 1;
    }
    f << result.csv;
    m << result.meta.dump(2) << '\n';
  }
  if (!result.checks_passed) {
    err << "check failed: see metadata\n";
    return 2;
  }
  return 0;
}

}  // namespace gutzlcu::cli
