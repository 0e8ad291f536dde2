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

#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "cqp/errors.hpp"

namespace cqp::cli {

namespace {

using nlohmann::json;

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string join(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
}

void reject_unknown(const json& j, const std::string& path,
                    std::initializer_list<const char*> known) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) throw ConfigError(join(path, item.key()), "unknown field");
  }
}

const json& member(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(join(path, key), "missing required field");
  return *it;
}

double positive_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(path, "must be a positive finite number");
  return x;
}

std::size_t count(const json& v, const std::string& path, std::size_t lo, std::size_t hi) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  const auto x = v.get<long long>();
  if (x < static_cast<long long>(lo) || x > static_cast<long long>(hi)) {
    throw ConfigError(path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<std::size_t>(x);
}

std::string schema(const json& doc) {
  const json& v = member(doc, "", "schema_version");
  if (!v.is_string()) throw ConfigError("/schema_version", "expected a string");
  if (v.get<std::string>() != kSchemaVersion) {
    throw ConfigError("/schema_version", "unsupported version '" + v.get<std::string>() +
                                             "' (this build reads \"" + kSchemaVersion + "\")");
  }
  return v.get<std::string>();
}

ModeConfig parse_mode(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"f_GHz", "C_couple_fF"});
  return {positive_number(member(j, path, "f_GHz"), join(path, "f_GHz")),
          positive_number(member(j, path, "C_couple_fF"), join(path, "C_couple_fF"))};
}

BandConfig parse_band(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"f_lo_GHz", "f_hi_GHz"});
  BandConfig b{positive_number(member(j, path, "f_lo_GHz"), join(path, "f_lo_GHz")),
               positive_number(member(j, path, "f_hi_GHz"), join(path, "f_hi_GHz"))};
  if (!(b.f_lo_ghz < b.f_hi_ghz)) throw ConfigError(join(path, "f_hi_GHz"), "must exceed f_lo_GHz");
  return b;
}

ResonatorModel parse_model(const json& doc) {
  auto it = doc.find("resonator_model");
  if (it == doc.end()) return ResonatorModel::kLumped;
  if (it->is_string() && *it == "lumped") return ResonatorModel::kLumped;
  if (it->is_string() && *it == "stub") return ResonatorModel::kStub;
  throw ConfigError("/resonator_model", "expected \"lumped\" or \"stub\"");
}

double z0_of(const json& doc) {
  auto it = doc.find("Z0_ohms");
  return it == doc.end() ? 50.0 : positive_number(*it, "/Z0_ohms");
}

std::optional<double> chi_of(const json& doc, const char* keyword) {
  const json& v = member(doc, "", "chi_MHz");
  if (v.is_string()) {
    if (v == keyword) return std::nullopt;
    throw ConfigError("/chi_MHz", std::string("expected a number or \"") + keyword + "\"");
  }
  return positive_number(v, "/chi_MHz");
}

Band to_band(const BandConfig& b) {
  return {AngularFrequency::from_ghz(b.f_lo_ghz), AngularFrequency::from_ghz(b.f_hi_ghz)};
}

// Placeholder chi used to validate a "solve" device at parse time.
const double kProbeChi = to_angular(1e6);

}  // namespace

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error(field.empty() ? message : field + ": " + message),
      field_(std::move(field)) {}

DeviceConfig parse_device_config(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "", {"schema_version", "n_qubits", "modes", "chi_MHz", "Z0_ohms", "band",
                           "resonator_model", "free", "search"});
  DeviceConfig c;
  c.schema_version = schema(doc);
  c.n_qubits = count(member(doc, "", "n_qubits"), "/n_qubits", 1, kMaxQubits);

  const json& modes = member(doc, "", "modes");
  if (!modes.is_array() || modes.empty()) throw ConfigError("/modes", "expected a non-empty array");
  for (std::size_t k = 0; k < modes.size(); ++k) {
    c.modes.push_back(parse_mode(modes[k], join("/modes", k)));
    if (k > 0 && !(c.modes[k].f_ghz > c.modes[k - 1].f_ghz)) {
      throw ConfigError(join(join("/modes", k), "f_GHz"), "mode frequencies must strictly increase");
    }
  }
  c.chi_mhz = chi_of(doc, "solve");
  c.z0_ohms = z0_of(doc);
  if (auto it = doc.find("band"); it != doc.end()) c.band = parse_band(*it, "/band");
  c.model = parse_model(doc);
  if (auto it = doc.find("free"); it != doc.end()) {
    if (it->is_string() && *it == "chi") {
      c.free = FreeParameters::kChi;
    } else if (it->is_string() && *it == "chi+modes") {
      c.free = FreeParameters::kChiAndModes;
    } else {
      throw ConfigError("/free", "expected \"chi\" or \"chi+modes\"");
    }
  }
  if (auto it = doc.find("search"); it != doc.end()) {
    require_object(*it, "/search");
    reject_unknown(*it, "/search",
                   {"f_lo_GHz", "f_hi_GHz", "chi_lo_MHz", "chi_hi_MHz", "grid_points"});
    if (it->contains("f_lo_GHz") || it->contains("f_hi_GHz")) {
      c.search_band = BandConfig{
          positive_number(member(*it, "/search", "f_lo_GHz"), "/search/f_lo_GHz"),
          positive_number(member(*it, "/search", "f_hi_GHz"), "/search/f_hi_GHz")};
      if (!(c.search_band->f_lo_ghz < c.search_band->f_hi_ghz)) {
        throw ConfigError("/search/f_hi_GHz", "must exceed f_lo_GHz");
      }
    }
    if (auto v = it->find("chi_lo_MHz"); v != it->end()) {
      c.chi_lo_mhz = positive_number(*v, "/search/chi_lo_MHz");
    }
    if (auto v = it->find("chi_hi_MHz"); v != it->end()) {
      c.chi_hi_mhz = positive_number(*v, "/search/chi_hi_MHz");
    }
    if (auto v = it->find("grid_points"); v != it->end()) {
      c.grid_points = count(*v, "/search/grid_points", 3, 4097);
    }
  }

  try {
    (void)c.device(c.chi_mhz ? to_angular(*c.chi_mhz * 1e6) : kProbeChi);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("", std::string("inconsistent device: ") + e.what());
  } catch (const Error& e) {
    throw ConfigError("", std::string("inconsistent device: ") + e.what());
  }
  return c;
}

ParityDevice DeviceConfig::device(double chi) const {
  std::vector<Mode> ms;
  for (const auto& m : modes) ms.push_back({AngularFrequency::from_ghz(m.f_ghz), m.c_couple_ff * 1e-15});
  std::optional<Band> b;
  if (band) b = to_band(*band);
  return ParityDevice::equal_coupling(n_qubits, std::move(ms), chi, z0_ohms, model, b);
}

ParityDevice DeviceConfig::device() const {
  if (!chi_mhz) throw ConfigError("/chi_MHz", "a numeric chi (or a solution file) is required here");
  return device(to_angular(*chi_mhz * 1e6));
}

SolveOptions DeviceConfig::solve_options(double tol) const {
  SolveOptions o;
  o.free = free;
  o.tol = tol;
  if (search_band) o.search_band = to_band(*search_band);
  if (chi_lo_mhz) o.chi_lo = to_angular(*chi_lo_mhz * 1e6);
  if (chi_hi_mhz) o.chi_hi = to_angular(*chi_hi_mhz * 1e6);
  if (grid_points) o.grid_points = *grid_points;
  return o;
}

CascadeConfig parse_cascade_config(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "", {"schema_version", "n_qubits", "cavity", "chi_MHz", "Z0_ohms", "band",
                           "resonator_model", "tune"});
  CascadeConfig c;
  c.schema_version = schema(doc);
  c.n_qubits = count(member(doc, "", "n_qubits"), "/n_qubits", 1, kMaxQubits);
  c.cavity = parse_mode(member(doc, "", "cavity"), "/cavity");
  c.chi_mhz = chi_of(doc, "match");
  c.z0_ohms = z0_of(doc);
  if (auto it = doc.find("band"); it != doc.end()) c.band = parse_band(*it, "/band");
  c.model = parse_model(doc);
  if (auto it = doc.find("tune"); it != doc.end()) {
    if (it->is_string() && *it == "coupling") {
      c.tune = CascadeKnob::kCoupling;
    } else if (it->is_string() && *it == "chi") {
      c.tune = CascadeKnob::kChi;
    } else {
      throw ConfigError("/tune", "expected \"coupling\" or \"chi\"");
    }
  }
  try {
    (void)c.device(c.chi_mhz ? to_angular(*c.chi_mhz * 1e6) : kProbeChi);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("", std::string("inconsistent cascade: ") + e.what());
  } catch (const Error& e) {
    throw ConfigError("", std::string("inconsistent cascade: ") + e.what());
  }
  return c;
}

CascadeDevice CascadeConfig::device(double chi) const {
  std::optional<Band> b;
  if (band) b = to_band(*band);
  return CascadeDevice::uniform(
      n_qubits, {AngularFrequency::from_ghz(cavity.f_ghz), chi, cavity.c_couple_ff * 1e-15},
      z0_ohms, model, b);
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", path.string() + ": " + e.what());
  }
}

}  // namespace cqp::cli
