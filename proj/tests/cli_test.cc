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

#include <cstdlib>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "commands.h"

namespace gutzlcu::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) v.push_back(f);
  if (!line.empty() && line.back() == ',') v.emplace_back();
  return v;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

TEST(FormatDouble, RoundTripsAndNormalizesZero) {
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(TwoSite, DefaultRunEmitsFourCurveFamilies) {
  const auto r = run({"two-site", "--shots", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines[0],
            "U,g,method,denominator,denominator_err,zz_numerator,zz_err,xx_numerator,xx_err,E,E_err,"
            "K,K_err,UD,UD_err");
  std::set<std::string> us;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto f = fields_of(lines[k]);
    ASSERT_EQ(f.size(), 15u) << lines[k];
    us.insert(f[0]);
  }
  EXPECT_EQ(us.size(), 4u);
}

TEST(TwoSite, AnalyticMinimumNearOptimum) {
  const auto r = run({"two-site", "--shots", "0", "--U", "4", "--g-step", "0.05"});
  ASSERT_EQ(r.code, 0) << r.err;
  double best = 1e9;
  double best_g = -1.0;
  for (const auto& l : lines_of(r.out)) {
    const auto f = fields_of(l);
    if (f.size() < 10 || f[2] != "analytic") continue;
    const double e = std::stod(f[9]);
    if (e < best) best = e, best_g = std::stod(f[1]);
  }
  EXPECT_LE(std::abs(best_g - std::log(1.0 + std::sqrt(2.0))), 0.05);
}

TEST(TwoSite, EmptyGridIsConfigError) {
  const auto r = run({"two-site", "--g-min", "1", "--g-max", "0.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("config error"), std::string::npos);
}

TEST(Sweep, ChainFourMethodsAgree) {
  const auto r = run({"sweep", "--lattice", "chain:4", "--U", "2", "--g-min", "0.2", "--g-max", "1.0",
                      "--g-step", "0.4", "--nmc", "20000", "--bins", "50",
                      "--methods", "mc,fullsum,exact-gutzwiller,ground"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  int mc = 0;
  int full = 0;
  int exact = 0;
  int ground = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto f = fields_of(lines[k]);
    const auto& m = f[2];
    mc += m == "mc";
    full += m == "fullsum";
    exact += m == "exact-gutzwiller";
    ground += m == "ground";
  }
  EXPECT_EQ(mc, 3);
  EXPECT_EQ(full, 3);
  EXPECT_EQ(exact, 3);
  EXPECT_EQ(ground, 1);
}

TEST(Sweep, SizeLimitsCheckedBeforeCompute) {
  EXPECT_EQ(run({"sweep", "--lattice", "chain:14", "--methods", "mc"}).code, 1);
  EXPECT_EQ(run({"sweep", "--lattice", "chain:8", "--methods", "fullsum"}).code, 1);
}

TEST(Sweep, DuplicatePointsAreDeduplicated) {
  const auto r = run({"sweep", "--lattice", "chain:2", "--U", "4,4", "--g-min", "0.5", "--g-max",
                      "0.5", "--methods", "fullsum"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(lines_of(r.out).size(), 2u);
}

TEST(Mc, ReproducibleBytesAndSidecar) {
  const std::string path = ::testing::TempDir() + "mc.csv";
  const std::vector<std::string> args{"mc", "--lattice", "chain:2", "--U", "4", "--g-min", "0.5",
                                      "--g-max", "0.9", "--g-step", "0.4", "--nmc", "2000",
                                      "--seed", "9"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines_of(a.out)[0], "g,U,E_mean,E_err,K_mean,K_err,UD_mean,UD_err,acceptance,n_mc,seed");
  EXPECT_EQ(lines_of(a.out).size(), 3u);
  auto with_out = args;
  with_out.push_back("--out");
  with_out.push_back(path);
  ASSERT_EQ(run(with_out).code, 0);
  std::ifstream csv(path);
  std::stringstream body;
  body << csv.rdbuf();
  EXPECT_EQ(body.str(), a.out);
  std::ifstream side(path + ".json");
  const auto meta = nlohmann::json::parse(side);
  EXPECT_EQ(meta["seed"], 9);
  EXPECT_EQ(meta["generator"], "mt19937_64");
  EXPECT_TRUE(meta.contains("version"));
  EXPECT_TRUE(meta.contains("config"));
}

TEST(Lcu, MonotoneTable) {
  const auto r = run({"lcu", "--sizes", "2,4,6", "--g-min", "0", "--g-max", "1", "--g-step", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  EXPECT_EQ(lines[0], "N_site,g,p,log_p");
  EXPECT_EQ(lines.size(), 10u);
}

TEST(HstVerify, DefaultTablePasses) {
  const auto r = run({"hst-verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  EXPECT_EQ(lines[0], "variant,regime,J,gamma,alpha,max_deviation,dense_deviation");
  EXPECT_EQ(lines.size(), 19u);
}

TEST(PhaseCheck, ChainFourPasses) {
  const auto r = run({"phase-check", "--lattice", "chain:4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines_of(r.out).size(), 4u);
}

TEST(ConfigFile, ValuesApplyAndFlagsOverride) {
  const auto path = write_temp("run.cfg", "# comment\nlattice = chain:2\nU = 4\ng-min = 0.5\ng-max = 0.5\n");
  const auto r = run({"sweep", "--config", path, "--methods", "fullsum"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = fields_of(lines_of(r.out)[1]);
  EXPECT_EQ(f[0], "0.5");
  const auto o = run({"sweep", "--config", path, "--methods", "fullsum", "--g-min", "0.25"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rows = lines_of(o.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(fields_of(rows[1])[0], "0.25");
  EXPECT_NEAR(std::stod(fields_of(rows[3])[0]), 0.45, 1e-12);
}

TEST(ConfigFile, UnknownKeyReportsLine) {
  const auto path = write_temp("bad.cfg", "lattice = chain:2\n\nlatice = chain:4\n");
  const auto r = run({"sweep", "--config", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad.cfg:3"), std::string::npos) << r.err;
}

TEST(Environment, PrefixedVariablesApply) {
  ::setenv("GUTZ_LATTICE", "chain:2", 1);
  const auto r = run({"phase-check", "--g-values", "1"});
  ::unsetenv("GUTZ_LATTICE");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = fields_of(lines_of(r.out)[1]);
  EXPECT_EQ(f[1], "16");
}

TEST(Usage, ErrorsAndHelp) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"mc", "--backend", "tensor"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace gutzlcu::cli
