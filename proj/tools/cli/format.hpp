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

#ifndef CQP_CLI_FORMAT_HPP
#define CQP_CLI_FORMAT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/config.hpp"
#include "cqp/cascade.hpp"
#include "cqp/eraser.hpp"
#include "cqp/estimates.hpp"
#include "cqp/fidelity.hpp"

namespace cqp::cli {

/// printf-style "%.12g": the fixed textual precision of every artifact.
std::string fmt12(double x);

/// x rounded to 12 significant digits, so that JSON output is stable.
double round12(double x);

/// Exact, locale-independent round trip of a double ("%a").
std::string hexfloat(double x);
double parse_hexfloat(const std::string& s, const std::string& field);

/// Point of a stored solution, recovered bit-exactly.
struct StoredSolution {
  AngularFrequency w_p{1.0};
  double chi = 0.0;
  std::vector<AngularFrequency> modes;
  std::vector<double> residuals;  // as written (12 digits)
};

nlohmann::json solution_to_json(const EraserSolution& sol, const DeviceConfig& cfg,
                                const DispersionReport& disp, double tol);
StoredSolution solution_from_json(const nlohmann::json& doc, const DeviceConfig& cfg);

/// Device described by a config plus a stored solution.
ParityDevice device_for(const DeviceConfig& cfg, const StoredSolution& stored);

nlohmann::json reports_to_json(const std::vector<FidelityReport>& reports);
std::string reports_to_csv(const std::vector<FidelityReport>& reports);
nlohmann::json summary_to_json(const SchemeSummary& s);

/// One line per number, names padded; used by `estimate`.
std::string table(const std::vector<std::pair<std::string, std::string>>& rows);

/// Writes text, throwing std::runtime_error on I/O failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace cqp::cli

#endif  // CQP_CLI_FORMAT_HPP
