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

#include "cli/commands.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "cli/config.hpp"
#include "cli/format.hpp"
#include "cqp/cascade.hpp"
#include "cqp/errors.hpp"
#include "cqp/estimates.hpp"
#include "cqp/fidelity.hpp"

namespace cqp::cli {

namespace {

using nlohmann::json;

void emit(const std::optional<Path>& path, const std::string& text, std::ostream& out) {
  if (path) {
    write_text(*path, text);
  } else {
    out << text;
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ProbePulse pulse_from(double alpha_sq, double t_us, AngularFrequency w_p) {
  if (!(alpha_sq >= 0.0)) throw ConfigError("--alpha-sq", "must be >= 0");
  if (!(t_us > 0.0)) throw ConfigError("--T-us", "must be positive");
  return ProbePulse::from_duration(alpha_sq, w_p, t_us * 1e-6);
}

json pulse_json(const ProbePulse& p) {
  return {{"alpha_sq", round12(p.photons())},
          {"T_us", round12(p.duration() * 1e6)},
          {"W_rad_s", round12(p.bandwidth)},
          {"f_p_GHz", round12(p.w_p.ghz())}};
}

}  // namespace

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream&) {
  if (a.points < 2) throw ConfigError("--points", "need at least 2 points");
  const DeviceConfig cfg = parse_device_config(read_json(a.config));
  const ParityDevice dev = a.solution
                               ? device_for(cfg, solution_from_json(read_json(*a.solution), cfg))
                               : cfg.device();
  const DeviceResponse resp(dev);
  const Band band = resp.band();
  const std::size_t n = dev.n_qubits();

  std::ostringstream os;
  os << "f_GHz";
  for (std::size_t w = 0; w <= n; ++w) os << ",theta_wt" << w << "_deg";
  os << '\n';
  const double lo = band.lo.rad_per_s();
  const double hi = band.hi.rad_per_s();
  for (std::size_t i = 0; i < a.points; ++i) {
    double w = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(a.points - 1);
    if (i + 1 == a.points) w = hi;
    const AngularFrequency at(w);
    os << fmt12(at.ghz());
    for (std::size_t k = 0; k <= n; ++k) os << ',' << fmt12(degrees(resp.phase_by_weight(k, at)));
    os << '\n';
  }
  emit(a.out, os.str(), out);
  return kOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream&) {
  const DeviceConfig cfg = parse_device_config(read_json(a.config));
  if (!(a.tol >= 1e-9)) throw ConfigError("--tol", "must be >= 1e-9 rad");
  const ParityDevice tmpl = cfg.device(cfg.chi_mhz ? to_angular(*cfg.chi_mhz * 1e6) : to_angular(1e6));
  const EraserSolution sol = solve_eraser(tmpl, cfg.solve_options(a.tol));
  const ParityDevice dev = solved_device(tmpl, sol);
  const DispersionReport disp = dispersion_report(dev, sol);
  if (a.out) write_text(*a.out, dump(solution_to_json(sol, cfg, disp, a.tol)));
  out << "f_p= " << fmt12(sol.w_p.ghz()) << " GHz chi= " << fmt12(to_ordinary(sol.chi) * 1e-6)
      << " MHz dtheta= " << fmt12(degrees(sol.delta_theta)) << " deg";
  if (sol.low_contrast) out << " (low contrast)";
  out << '\n';
  return kOk;
}

int cmd_fidelity(const FidelityArgs& a, std::ostream& out, std::ostream&) {
  const DeviceConfig cfg = parse_device_config(read_json(a.config));
  const StoredSolution stored = solution_from_json(read_json(a.solution), cfg);
  const ParityDevice dev = device_for(cfg, stored);
  const ProbePulse pulse = pulse_from(a.alpha_sq, a.t_us, stored.w_p);
  if (a.points < 201 || a.points % 2 == 0) throw ConfigError("--points", "must be odd and >= 201");

  const EraserSolution sol = evaluate_solution(dev, stored.w_p);
  QualityOptions q;
  q.points = a.points;
  const auto reports = eraser_quality(dev, sol, pulse, q);

  json j;
  j["schema_version"] = kSchemaVersion;
  j["pulse"] = pulse_json(pulse);
  j["residuals_rad"] = json::array();
  for (double r : sol.residuals) j["residuals_rad"].push_back(round12(r));
  j["delta_theta_deg"] = round12(degrees(sol.delta_theta));
  j["reports"] = reports_to_json(reports);
  if (a.out_csv) write_text(*a.out_csv, reports_to_csv(reports));
  emit(a.out_json, dump(j), out);
  return kOk;
}

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream&) {
  const DeviceConfig cfg = parse_device_config(read_json(a.config));
  const StoredSolution stored = solution_from_json(read_json(a.solution), cfg);
  const CascadeConfig ccfg = parse_cascade_config(read_json(a.cascade));
  if (ccfg.n_qubits != cfg.n_qubits) throw ConfigError("/n_qubits", "cascade and device differ");
  const ParityDevice dev = device_for(cfg, stored);
  const ProbePulse pulse = pulse_from(a.alpha_sq, a.t_us, stored.w_p);
  const EraserSolution sol = evaluate_solution(dev, stored.w_p);
  const CascadeDevice ctmpl = ccfg.device(ccfg.chi_mhz ? to_angular(*ccfg.chi_mhz * 1e6) : sol.chi);
  const SchemeComparison cmp = compare_schemes(dev, sol, ctmpl, pulse, ccfg.tune);

  json j;
  j["schema_version"] = kSchemaVersion;
  j["pulse"] = {{"alpha_sq", round12(pulse.photons())}, {"T_us", round12(pulse.duration() * 1e6)}};
  j["parallel"] = summary_to_json(cmp.parallel);
  j["cascade"] = summary_to_json(cmp.cascade);
  const Cavity& c = cmp.tuning.device.cavities().front();
  j["cascade_tuning"] = {{"knob", ccfg.tune == CascadeKnob::kChi ? "chi" : "coupling"},
                         {"f_p_GHz", round12(cmp.tuning.w_p.ghz())},
                         {"chi_MHz", round12(to_ordinary(c.chi) * 1e-6)},
                         {"C_couple_fF", round12(c.coupling_capacitance * 1e15)},
                         {"step_rad", round12(cmp.tuning.step)},
                         {"b_single_s", round12(cmp.tuning.b_single)}};
  j["b_ratio_cascade_over_parallel"] =
      cmp.parallel.b > 0.0 ? json(round12(cmp.cascade.b / cmp.parallel.b)) : json(nullptr);
  j["quadratic_closed_error"] = round12(cmp.quadratic_closed_error);
  emit(a.out, dump(j), out);
  return kOk;
}

int cmd_estimate(const EstimateArgs& a, std::ostream& out, std::ostream&) {
  auto positive = [](double v, const char* flag) {
    if (!(v > 0.0)) throw ConfigError(flag, "must be positive");
    return v;
  };
  const double delta = to_angular(positive(a.delta_ghz, "--delta-GHz") * 1e9);
  const double kappa = to_angular(positive(a.kappa_mhz, "--kappa-MHz") * 1e6);
  const double chi = to_angular(positive(a.chi_mhz, "--chi-MHz") * 1e6);
  const double wp = to_angular(positive(a.fp_ghz, "--fp-GHz") * 1e9);
  const double t = positive(a.t_us, "--T-us") * 1e-6;
  if (!(a.alpha_sq >= 0.0)) throw ConfigError("--alpha-sq", "must be >= 0");

  const ConventionPair t1 = purcell_t1(delta, kappa, chi);
  const ConventionPair tm = measurement_time(chi, positive(a.safety, "--safety"));
  const ConventionPair tm1 = measurement_time(chi, 1.0);
  const Power p = peak_power(a.alpha_sq, wp, t);
  const double kap = kappa_from_coupling(positive(a.cc_ff, "--Cc-fF") * 1e-15,
                                         positive(a.z0, "--Z0"), to_angular(positive(a.fr_ghz, "--fr-GHz") * 1e9));

  const std::string pref = std::string(to_string(t1.preferred));
  const std::string alt = std::string(to_string(RateConvention::kAngular));
  json j;
  j["schema_version"] = kSchemaVersion;
  j["inputs"] = {{"delta_GHz", a.delta_ghz}, {"kappa_MHz", a.kappa_mhz}, {"chi_MHz", a.chi_mhz},
                 {"alpha_sq", a.alpha_sq},   {"T_us", a.t_us},          {"fp_GHz", a.fp_ghz},
                 {"safety_factor", a.safety}};
  j["purcell_T1_us"] = {{"value", round12(t1.value() * 1e6)},
                        {"convention", pref},
                        {"alternative", round12(t1.angular * 1e6)},
                        {"alternative_convention", alt}};
  j["measurement_time_us"] = {{"value", round12(tm.value() * 1e6)},
                              {"convention", std::string(to_string(tm.preferred))},
                              {"alternative", round12(tm.angular * 1e6)},
                              {"alternative_convention", alt}};
  j["optimistic_time_us"] = {{"value", round12(tm1.value() * 1e6)},
                             {"alternative", round12(tm1.angular * 1e6)}};
  j["peak_power"] = {{"W", round12(p.watts)}, {"dBm", round12(p.dbm)}};
  j["kappa_from_coupling_MHz"] = {{"value", round12(to_ordinary(kap) * 1e-6)},
                                  {"note", "kappa/2pi; order-of-magnitude estimator"}};

  std::string text;
  if (a.json || a.out) {
    text = dump(j);
  } else {
    text = table({
        {"purcell_T1_us", fmt12(t1.value() * 1e6) + "  [" + pref + "]"},
        {"purcell_T1_us", fmt12(t1.angular * 1e6) + "  [" + alt + "]"},
        {"measurement_time_us", fmt12(tm.value() * 1e6) + "  [" + pref + "]"},
        {"measurement_time_us", fmt12(tm.angular * 1e6) + "  [" + alt + "]"},
        {"optimistic_time_us", fmt12(tm1.value() * 1e6) + "  [" + pref + "]"},
        {"peak_power_W", fmt12(p.watts)},
        {"peak_power_dBm", fmt12(p.dbm)},
        {"kappa_from_coupling_MHz", fmt12(to_ordinary(kap) * 1e-6) + "  [kappa/2pi, order of magnitude]"},
    });
  }
  emit(a.out, text, out);
  return kOk;
}

int run_command(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NoSolution& e) {
    err << "no solution: " << e.what() << '\n';
    if (const auto& b = e.best()) {
      err << "best candidate: f_p= " << fmt12(to_ordinary(b->w_p) * 1e-9)
          << " GHz chi= " << fmt12(to_ordinary(b->chi) * 1e-6)
          << " MHz residual_norm= " << fmt12(b->residual_norm) << " rad\n";
    }
    return kNoSolutionFound;
  } catch (const std::exception& e) {
    err << "evaluation error: " << e.what() << '\n';
    return kEvaluationError;
  }
}

}  // namespace cqp::cli
