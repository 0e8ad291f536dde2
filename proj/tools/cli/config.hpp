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

#ifndef CQP_CLI_CONFIG_HPP
#define CQP_CLI_CONFIG_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cqp/cascade.hpp"
#include "cqp/device.hpp"
#include "cqp/eraser.hpp"

namespace cqp::cli {

inline constexpr const char* kSchemaVersion = "1";

/// Rejected configuration. `field` is a JSON-pointer style path such as
/// "/modes/1/f_GHz" (empty for document-level problems).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct ModeConfig {
  double f_ghz;
  double c_couple_ff;
};

struct BandConfig {
  double f_lo_ghz;
  double f_hi_ghz;
};

/// Parallel multi-resonance device as written in a config file. Frequencies
/// in GHz, capacitances in fF, chi as chi/2pi in MHz.
struct DeviceConfig {
  std::string schema_version;
  std::size_t n_qubits = 0;
  std::vector<ModeConfig> modes;
  std::optional<double> chi_mhz;  // empty: "solve"
  double z0_ohms = 50.0;
  std::optional<BandConfig> band;
  ResonatorModel model = ResonatorModel::kLumped;
  FreeParameters free = FreeParameters::kChi;
  std::optional<BandConfig> search_band;
  std::optional<double> chi_lo_mhz;
  std::optional<double> chi_hi_mhz;
  std::optional<std::size_t> grid_points;

  /// The device with the given chi (rad/s).
  ParityDevice device(double chi) const;
  /// The device at the configured chi; throws ConfigError if chi is "solve".
  ParityDevice device() const;
  SolveOptions solve_options(double tol) const;
};

DeviceConfig parse_device_config(const nlohmann::json& doc);

/// Cascade of identical cavities. chi_MHz may be "match" to take the parallel
/// solution's chi when comparing.
struct CascadeConfig {
  std::string schema_version;
  std::size_t n_qubits = 0;
  ModeConfig cavity{};
  std::optional<double> chi_mhz;  // empty: "match"
  double z0_ohms = 50.0;
  std::optional<BandConfig> band;
  ResonatorModel model = ResonatorModel::kLumped;
  CascadeKnob tune = CascadeKnob::kCoupling;

  CascadeDevice device(double chi) const;
};

CascadeConfig parse_cascade_config(const nlohmann::json& doc);

/// Reads and parses a JSON file; syntax errors become ConfigError with the
/// line and column.
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace cqp::cli

#endif  // CQP_CLI_CONFIG_HPP
