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

#include "cli/format.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cqp::cli {

namespace {

using nlohmann::json;

std::string model_name(ResonatorModel m) { return m == ResonatorModel::kStub ? "stub" : "lumped"; }

json rounded(const std::vector<double>& v, double scale = 1.0) {
  json a = json::array();
  for (double x : v) a.push_back(round12(x * scale));
  return a;
}

}  // namespace

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

std::string hexfloat(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

double parse_hexfloat(const std::string& s, const std::string& field) {
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw ConfigError(field, "not a number: " + s);
  return x;
}

json solution_to_json(const EraserSolution& sol, const DeviceConfig& cfg,
                      const DispersionReport& disp, double tol) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n_qubits"] = cfg.n_qubits;
  j["resonator_model"] = model_name(cfg.model);
  j["f_p_GHz"] = round12(sol.w_p.ghz());
  j["chi_MHz"] = round12(to_ordinary(sol.chi) * 1e-6);
  j["chi_convention"] = "chi/2pi, ordinary frequency";
  json modes = json::array();
  for (const auto& m : sol.mode_frequencies) modes.push_back(round12(m.ghz()));
  j["modes_GHz"] = modes;
  j["theta_by_weight_rad"] = rounded(sol.theta_by_weight);
  j["theta_by_weight_deg"] = rounded(sol.theta_by_weight, 180.0 / kPi);
  j["residuals_rad"] = rounded(sol.residuals);
  j["delta_theta_rad"] = round12(sol.delta_theta);
  j["delta_theta_deg"] = round12(degrees(sol.delta_theta));
  j["dispersion_b_s"] = round12(sol.dispersion_b);
  j["dispersion_b2_s2"] = round12(sol.dispersion_b2);
  j["low_contrast"] = sol.low_contrast;
  j["roots_found"] = sol.roots_found;
  j["tol_rad"] = tol;
  json pairs = json::object();
  for (const auto& [name, list] : {std::pair{"even", &disp.even}, std::pair{"odd", &disp.odd}}) {
    json arr = json::array();
    for (const auto& e : *list) {
      arr.push_back({{"weights", {e.weight_a, e.weight_b}},
                     {"b_s", round12(e.b)},
                     {"b2_s2", round12(e.b2)}});
    }
    pairs[name] = arr;
  }
  j["dispersion"] = pairs;
  json exact;
  exact["w_p_rad_s"] = hexfloat(sol.w_p.rad_per_s());
  exact["chi_rad_s"] = hexfloat(sol.chi);
  json em = json::array();
  for (const auto& m : sol.mode_frequencies) em.push_back(hexfloat(m.rad_per_s()));
  exact["modes_rad_s"] = em;
  j["exact"] = exact;
  return j;
}

StoredSolution solution_from_json(const json& doc, const DeviceConfig& cfg) {
  if (!doc.is_object()) throw ConfigError("", "solution must be a JSON object");
  auto version = doc.find("schema_version");
  if (version == doc.end() || !version->is_string() || *version != kSchemaVersion) {
    throw ConfigError("/schema_version", "solution schema must be \"1\"");
  }
  auto n = doc.find("n_qubits");
  if (n == doc.end() || !n->is_number_integer() || n->get<std::size_t>() != cfg.n_qubits) {
    throw ConfigError("/n_qubits", "solution was produced for a different qubit count");
  }
  auto exact = doc.find("exact");
  if (exact == doc.end() || !exact->is_object()) throw ConfigError("/exact", "missing exact values");
  auto str = [&](const char* key) {
    auto it = exact->find(key);
    if (it == exact->end() || !it->is_string()) {
      throw ConfigError(std::string("/exact/") + key, "expected a hex-float string");
    }
    return parse_hexfloat(it->get<std::string>(), std::string("/exact/") + key);
  };
  StoredSolution s;
  try {
    s.w_p = AngularFrequency(str("w_p_rad_s"));
  } catch (const std::invalid_argument&) {
    throw ConfigError("/exact/w_p_rad_s", "must be positive");
  }
  s.chi = str("chi_rad_s");
  if (!(s.chi > 0.0)) throw ConfigError("/exact/chi_rad_s", "must be positive");
  auto modes = exact->find("modes_rad_s");
  if (modes == exact->end() || !modes->is_array() || modes->size() != cfg.modes.size()) {
    throw ConfigError("/exact/modes_rad_s", "expected one entry per configured mode");
  }
  for (std::size_t k = 0; k < modes->size(); ++k) {
    const std::string field = "/exact/modes_rad_s/" + std::to_string(k);
    if (!(*modes)[k].is_string()) throw ConfigError(field, "expected a hex-float string");
    const double w = parse_hexfloat((*modes)[k].get<std::string>(), field);
    if (!(w > 0.0)) throw ConfigError(field, "must be positive");
    s.modes.emplace_back(w);
  }
  if (auto r = doc.find("residuals_rad"); r != doc.end() && r->is_array()) {
    for (const auto& v : *r) {
      if (v.is_number()) s.residuals.push_back(v.get<double>());
    }
  }
  return s;
}

ParityDevice device_for(const DeviceConfig& cfg, const StoredSolution& stored) {
  try {
    return cfg.device(stored.chi).with_mode_frequencies(stored.modes);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("/exact", std::string("solution does not fit the config: ") + e.what());
  }
}

json reports_to_json(const std::vector<FidelityReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json o;
    o["a"] = r.a.to_string();
    o["b"] = r.b.to_string();
    o["branch"] = std::string(to_string(r.branch));
    o["F_numeric"] = round12(r.f_numeric);
    o["F_closed"] = r.f_closed ? json(round12(*r.f_closed)) : json(nullptr);
    arr.push_back(o);
  }
  return arr;
}

std::string reports_to_csv(const std::vector<FidelityReport>& reports) {
  std::ostringstream os;
  os << "a,b,branch,F_numeric,F_closed\n";
  for (const auto& r : reports) {
    os << r.a.to_string() << ',' << r.b.to_string() << ',' << to_string(r.branch) << ','
       << fmt12(r.f_numeric) << ',' << (r.f_closed ? fmt12(*r.f_closed) : "") << '\n';
  }
  return os.str();
}

json summary_to_json(const SchemeSummary& s) {
  json j;
  j["scheme"] = s.name;
  j["resonators"] = s.resonators;
  j["f_p_GHz"] = round12(s.w_p.ghz());
  j["chi_MHz"] = round12(to_ordinary(s.chi) * 1e-6);
  j["residuals_rad"] = rounded(s.residuals);
  j["delta_theta_deg"] = round12(degrees(s.delta_theta));
  j["b_s"] = round12(s.b);
  j["b2_s2"] = round12(s.b2);
  j["same_parity_min_F"] = round12(s.same_parity_min_f);
  j["cross_parity_max_F"] = round12(s.cross_parity_max_f);
  j["fidelities"] = reports_to_json(s.reports);
  return j;
}

std::string table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace cqp::cli
