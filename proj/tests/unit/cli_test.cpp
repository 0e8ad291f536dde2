// Copyright 2026 The cqedparity Authors
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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/format.hpp"
#include "cqp/eraser.hpp"

namespace cqp::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kConfigs{CQP_CONFIG_DIR};

SolveArgs solve_args(const fs::path& config, std::optional<fs::path> out = std::nullopt) {
  SolveArgs a;
  a.config = config;
  a.out = std::move(out);
  return a;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("cqp_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) const {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int run(const std::function<int(std::ostream&, std::ostream&)>& body) {
    out_.str("");
    err_.str("");
    return run_command([&] { return body(out_, err_); }, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, MalformedJsonIsConfigError) {
  const auto p = write("bad.json", "{\"schema_version\": \"1\",\n \"n_qubits\": 3,,}");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_solve(solve_args(p), o, e); }), kConfigError);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos) << err_.str();
}

TEST_F(CliTest, BadFieldNamesItsPath) {
  const auto p = write("bad.json", R"({"schema_version": "1", "n_qubits": 3,
    "modes": [{"f_GHz": 9.99, "C_couple_fF": 10}, {"f_GHz": -1, "C_couple_fF": 10}],
    "chi_MHz": "solve"})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_solve(solve_args(p), o, e); }), kConfigError);
  EXPECT_NE(err_.str().find("/modes/1/f_GHz"), std::string::npos) << err_.str();
}

TEST_F(CliTest, UnknownSchemaAndFieldsRejected) {
  const auto v2 = write("v2.json", R"({"schema_version": "2", "n_qubits": 1,
    "modes": [{"f_GHz": 10, "C_couple_fF": 10}], "chi_MHz": 5})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_solve(solve_args(v2), o, e); }), kConfigError);
  const auto extra = write("extra.json", R"({"schema_version": "1", "n_qubits": 1,
    "modes": [{"f_GHz": 10, "C_couple_fF": 10}], "chi_MHz": 5, "colour": "blue"})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_solve(solve_args(extra), o, e); }), kConfigError);
  EXPECT_NE(err_.str().find("/colour"), std::string::npos) << err_.str();
}

TEST_F(CliTest, SingleModeThreeQubitsHasNoSolution) {
  const auto p = write("one.json", R"({"schema_version": "1", "n_qubits": 3,
    "modes": [{"f_GHz": 10, "C_couple_fF": 10}], "chi_MHz": "solve"})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_solve(solve_args(p), o, e); }), kNoSolutionFound);
  EXPECT_NE(err_.str().find("mode"), std::string::npos) << err_.str();
}

TEST_F(CliTest, SweepHeaderAndColumns) {
  const auto csv = dir_ / "sweep.csv";
  SweepArgs a;
  a.out = csv;
  a.points = 101;
  a.config = write("fixed.json", R"({"schema_version": "1", "n_qubits": 1,
    "modes": [{"f_GHz": 10, "C_couple_fF": 10}], "chi_MHz": 5})");
  ASSERT_EQ(run([&](auto& o, auto& e) { return cmd_sweep(a, o, e); }), kOk) << err_.str();
  std::istringstream in(slurp(csv));
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "f_GHz,theta_wt0_deg,theta_wt1_deg");
  std::string line;
  double prev = -1.0;
  int rows = 0;
  while (std::getline(in, line)) {
    const double f = std::stod(line.substr(0, line.find(',')));
    EXPECT_GT(f, prev);
    prev = f;
    ++rows;
  }
  EXPECT_EQ(rows, 101);
}

TEST_F(CliTest, SolveIsDeterministicAndRoundTrips) {
  const auto cfg = kConfigs / "reference_3qubit.json";
  const auto s1 = dir_ / "s1.json";
  const auto s2 = dir_ / "s2.json";
  ASSERT_EQ(run([&](auto& o, auto& e) { return cmd_solve(solve_args(cfg, s1), o, e); }), kOk) << err_.str();
  const std::string summary = out_.str();
  EXPECT_EQ(summary.rfind("f_p= ", 0), 0u);
  ASSERT_EQ(run([&](auto& o, auto& e) { return cmd_solve(solve_args(cfg, s2), o, e); }), kOk);
  EXPECT_EQ(out_.str(), summary);
  EXPECT_EQ(slurp(s1), slurp(s2));

  const auto dcfg = parse_device_config(read_json(cfg));
  const auto doc = read_json(s1);
  const auto stored = solution_from_json(doc, dcfg);
  const auto sol = evaluate_solution(device_for(dcfg, stored), stored.w_p);
  ASSERT_EQ(sol.residuals.size(), doc["residuals_rad"].size());
  for (std::size_t i = 0; i < sol.residuals.size(); ++i) {
    EXPECT_EQ(round12(sol.residuals[i]), doc["residuals_rad"][i].get<double>());
  }
}

TEST_F(CliTest, FidelityAndCompareRun) {
  const auto cfg = kConfigs / "reference_3qubit.json";
  const auto sol = dir_ / "sol.json";
  ASSERT_EQ(run([&](auto& o, auto& e) { return cmd_solve(solve_args(cfg, sol), o, e); }), kOk);
  FidelityArgs f;
  f.config = cfg;
  f.solution = sol;
  f.out_json = dir_ / "fid.json";
  f.out_csv = dir_ / "fid.csv";
  ASSERT_EQ(run([&](auto& o, auto& e) { return cmd_fidelity(f, o, e); }), kOk) << err_.str();
  const auto fj = read_json(*f.out_json);
  EXPECT_EQ(fj["reports"].size(), 10u);  // weight pairs a <= b of 0..3
  CompareArgs c;
  c.config = cfg;
  c.solution = sol;
  c.cascade = kConfigs / "cascade_3qubit.json";
  c.out = dir_ / "cmp.json";
  ASSERT_EQ(run([&](auto& o, auto& e) { return cmd_compare(c, o, e); }), kOk) << err_.str();
  const auto cj = read_json(*c.out);
  EXPECT_LT(std::abs(cj["cascade"]["b_s"].get<double>()), std::abs(cj["parallel"]["b_s"].get<double>()));
}

TEST_F(CliTest, EstimateTable) {
  EstimateArgs a;
  a.json = true;
  ASSERT_EQ(run([&](auto& o, auto& e) { return cmd_estimate(a, o, e); }), kOk);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["schema_version"], "1");
}

TEST(Format, TwelveDigitsAndExactRoundTrip) {
  EXPECT_EQ(fmt12(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(round12(9.8039823217812345), 9.80398232178);
  for (double x : {1.0 / 3.0, 6.02214076e23, -1e-300, 9.803982321781234e9}) {
    EXPECT_EQ(parse_hexfloat(hexfloat(x), "x"), x);
  }
}

}  // namespace
}  // namespace cqp::cli
