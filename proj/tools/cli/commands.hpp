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

#ifndef CQP_CLI_COMMANDS_HPP
#define CQP_CLI_COMMANDS_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>

namespace cqp::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kEvaluationError = 3, kNoSolutionFound = 4 };

using Path = std::filesystem::path;

struct SweepArgs {
  Path config;
  std::optional<Path> solution;
  std::optional<Path> out;
  std::size_t points = 601;
};

struct SolveArgs {
  Path config;
  double tol = 1e-9;
  std::optional<Path> out;
};

struct FidelityArgs {
  Path config;
  Path solution;
  double alpha_sq = 5.0;
  double t_us = 1.0;
  std::size_t points = 4001;
  std::optional<Path> out_json;
  std::optional<Path> out_csv;
};

struct CompareArgs {
  Path config;
  Path solution;
  Path cascade;
  double alpha_sq = 5.0;
  double t_us = 1.0;
  std::optional<Path> out;
};

struct EstimateArgs {
  double delta_ghz = 5.0;
  double kappa_mhz = 5.0;
  double chi_mhz = 5.77;
  double alpha_sq = 5.0;
  double t_us = 1.0;
  double fp_ghz = 9.804;
  double safety = 10.0;
  double cc_ff = 10.0;
  double z0 = 50.0;
  double fr_ghz = 10.0;
  bool json = false;
  std::optional<Path> out;
};

// Each command writes artifacts to files (or `out` when no file is given)
// and diagnostics to `err`. Exceptions escape; run_command maps them.
int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err);
int cmd_fidelity(const FidelityArgs& a, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err);
int cmd_estimate(const EstimateArgs& a, std::ostream& out, std::ostream& err);

/// Runs a command and turns exceptions into the exit-code contract:
/// 2 configuration, 3 evaluation, 4 no solution.
int run_command(const std::function<int()>& body, std::ostream& err);

}  // namespace cqp::cli

#endif  // CQP_CLI_COMMANDS_HPP
