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


// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/format.hpp"
#include "cqp/cascade.hpp"
#include "cqp/eraser.hpp"
#include "cqp/estimates.hpp"
#include "cqp/fidelity.hpp"
#include "random_network.hpp"

namespace fs = std::filesystem;
using namespace cqp;
using namespace cqp::cli;

namespace {

const fs::path kConfigs{CQP_CONFIG_DIR};

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [violated]");
  }
};

std::string num(double x) { return fmt12(x); }

struct Solved {
  DeviceConfig cfg;
  StoredSolution stored;
  ParityDevice dev;
  double seconds;
};

// Runs the solve subcommand end to end and reads its artifact back.
Solved solve_config(const fs::path& config, const fs::path& out) {
  std::ostringstream o, e;
  const auto t0 = std::chrono::steady_clock::now();
  const int rc = run_command([&] { return cmd_solve({config, 1e-9, out}, o, e); }, e);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (rc != kOk) throw std::runtime_error("solve exited with " + std::to_string(rc) + ": " + e.str());
  std::printf("  solve %s: %s", config.filename().c_str(), o.str().c_str());
  DeviceConfig cfg = parse_device_config(read_json(config));
  StoredSolution stored = solution_from_json(read_json(out), cfg);
  ParityDevice dev = device_for(cfg, stored);
  return {cfg, stored, dev, dt};
}

double winding_error(const ParityDevice& dev, Band band, double expected, double* worst_total) {
  double worst = 0.0;
  SweepOptions o;
  o.z0 = dev.z0();
  for (const auto& s : QubitState::all(dev.n_qubits())) {
    const auto p = phase_sweep(build_state_network(dev, s), band.lo, band.hi, o);
    worst = std::max(worst, std::abs(std::abs(p.winding()) - expected));
    *worst_total = std::max(*worst_total, std::abs(p.total_phase_change()));
  }
  return worst;
}

Band config_band(const DeviceConfig& cfg) {
  return {AngularFrequency::from_ghz(cfg.band->f_lo_ghz), AngularFrequency::from_ghz(cfg.band->f_hi_ghz)};
}

}  // namespace

int main() {
  const fs::path work = fs::temp_directory_path() / "cqp_acceptance";
  fs::create_directories(work);
  int failures = 0;
  const auto report = [&](int id, const std::string& name, const std::function<Verdict()>& check) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& ex) {
      v.pass = false;
      v.detail = std::string("exception: ") + ex.what();
    }
    if (!v.pass) ++failures;
    std::printf("[%s] AC%d %s: %s\n", v.pass ? "PASS" : "FAIL", id, name.c_str(), v.detail.c_str());
    std::fflush(stdout);
  };

  std::optional<Solved> ref;
  report(1, "reference two-mode device solve", [&] {
    ref = solve_config(kConfigs / "reference_3qubit.json", work / "reference.json");
    const auto doc = read_json(work / "reference.json");
    const double f = doc["f_p_GHz"].get<double>();
    const double chi = doc["chi_MHz"].get<double>();
    const double dth = doc["delta_theta_deg"].get<double>();
    Verdict v;
    v.require(std::abs(f - 9.804) <= 0.005, "f_p=" + num(f) + " GHz vs 9.804 +/- 0.005");
    v.require(std::abs(chi - 5.77) <= 0.15, "chi/2pi=" + num(chi) + " MHz vs 5.77 +/- 0.15");
    v.require(std::abs(std::abs(dth) - 172.9) <= 1.0, "dtheta=" + num(dth) + " deg vs 172.9 +/- 1");
    v.require(ref->seconds < 60.0, "runtime " + num(ref->seconds) + " s < 60");
    return v;
  });

  report(2, "winding over 9.6-10.2 GHz", [&] {
    if (!ref) throw std::runtime_error("no reference solution");
    const Band band{AngularFrequency::from_ghz(9.6), AngularFrequency::from_ghz(10.2)};
    double total = 0.0;
    const double err = winding_error(ref->dev, band, 2 * kTwoPi, &total);
    Verdict v;
    v.require(err <= 1e-3, "max ||winding| - 4pi| = " + num(err) + " rad over 8 states (<= 1e-3)");
    v.detail += "; largest endpoint phase change " + num(total / kPi) + " pi";
    return v;
  });

  report(3, "eraser residuals at the solution", [&] {
    if (!ref) throw std::runtime_error("no reference solution");
    const auto w = ref->stored.w_p;
    const auto th = [&](const char* s) { return phase_for_state(ref->dev, QubitState::from_string(s), w); };
    const double r0 = std::abs(th("000") - th("011") - kTwoPi);
    const double r1 = std::abs(th("001") - th("111") - kTwoPi);
    Verdict v;
    v.require(r0 < 1e-6, "|th0 - th2 - 2pi| = " + num(r0));
    v.require(r1 < 1e-6, "|th1 - th3 - 2pi| = " + num(r1));
    return v;
  });

  report(4, "four-qubit three-mode solve", [&] {
    const auto s = solve_config(kConfigs / "four_qubit.json", work / "four.json");
    const auto res = eraser_residuals(s.dev, s.stored.w_p);
    double worst = 0.0;
    for (double r : res) worst = std::max(worst, std::abs(r));
    double total = 0.0;
    const double err = winding_error(s.dev, config_band(s.cfg), 3 * kTwoPi, &total);
    Verdict v;
    v.require(res.size() == 3 && worst < 1e-6, std::to_string(res.size()) + " residuals, max " + num(worst));
    v.require(err <= 1e-3, "max ||winding| - 6pi| = " + num(err) + " over 16 states");
    v.require(s.seconds < 600.0, "runtime " + num(s.seconds) + " s < 600");
    std::string modes;
    for (const auto& m : s.stored.modes) modes += (modes.empty() ? "" : "/") + num(m.ghz());
    v.detail += "; modes " + modes + " GHz";
    return v;
  });

  report(5, "closed forms vs mode sum", [&] {
    const auto wp = AngularFrequency::from_ghz(9.8);
    const double bw = 1e6;
    const auto grid = build_mode_grid(wp, bw);
    const auto zero = [](double) { return 0.0; };
    double lin = 0.0, quad = 0.0, forms = 0.0;
    for (double a2 : {1.0, 5.0, 25.0}) {
      const ProbePulse p(std::sqrt(a2), wp, bw);
      for (double x : {0.01, 0.1, 0.5}) {
        const double b = x / bw;
        const double fl = fidelity_numeric(zero, [&](double w) { return b * (w - wp.rad_per_s()); }, p, grid);
        lin = std::max(lin, std::abs(fl - fidelity_linear_closed(p.alpha, b, bw).value));
        const double b2 = x / (bw * bw);
        const auto q = [&](double w) { return b2 * (w - wp.rad_per_s()) * (w - wp.rad_per_s()); };
        const double fq = fidelity_numeric(zero, q, p, grid);
        const double closed = fidelity_quadratic_closed(p.alpha, b2, bw).value;
        quad = std::max(quad, std::abs(fq - closed));
        forms = std::max(forms, std::abs(closed - fidelity_quadratic_radical(p.alpha, b2, bw)));
      }
    }
    Verdict v;
    v.require(lin <= 1e-6, "linear max error " + num(lin));
    v.require(quad <= 1e-6, "quadratic max error " + num(quad));
    v.require(forms <= 1e-12, "quadratic complex vs radical " + num(forms));
    return v;
  });

  std::vector<FidelityReport> reports;
  report(6, "even/odd overlap", [&] {
    if (!ref) throw std::runtime_error("no reference solution");
    const double eo = fidelity_even_odd({1.0, 2.0}, kPi);  // |alpha|^2 = 5 exactly
    const auto pulse = ProbePulse::from_duration(5.0, ref->stored.w_p, 1e-6);
    const auto sol = evaluate_solution(ref->dev, ref->stored.w_p);
    reports = eraser_quality(ref->dev, sol, pulse);
    double cross = 0.0;
    for (const auto& r : reports) {
      if (r.branch == FidelityBranch::kEvenOdd) cross = std::max(cross, r.f_numeric);
    }
    Verdict v;
    v.require(eo == std::exp(-10.0), "closed form " + num(eo) + " == exp(-10)");
    v.require(cross < 2e-4, "max cross-parity F " + num(cross) + " < 2e-4");
    return v;
  });

  report(7, "Purcell and power estimates", [&] {
    const auto t1 = purcell_t1(to_angular(5e9), to_angular(5e6), to_angular(5.77e6));
    const auto p = peak_power(5.0, to_angular(9.804e9), 1e-6);
    Verdict v;
    v.require(t1.value() >= 150e-6 && t1.value() <= 210e-6,
              "T1 " + num(t1.value() * 1e6) + " us (" + std::string(to_string(t1.preferred)) +
                  "; other reading " + num(t1.angular * 1e6) + " us) in [150, 210]");
    v.require(std::abs(p.dbm + 135.0) <= 0.5, "P " + num(p.dbm) + " dBm vs -135 +/- 0.5");
    return v;
  });

  report(8, "invariant suites", [&] {
    if (!ref) throw std::runtime_error("no reference solution");
    Verdict v;
    testing::NetworkGenerator gen(1000);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto net = gen();
      worst = std::max(worst, std::abs(std::abs(reflection_coefficient(net, gen.frequency(1.0, 30.0), 50.0)) - 1.0));
    }
    v.require(worst <= 1e-9, "max ||r| - 1| " + num(worst) + " over 1000 networks");

    const DeviceResponse resp(ref->dev);
    bool collapse = true;
    for (const auto& s : QubitState::all(3)) {
      const auto rep = QubitState::with_weight(3, s.weight());
      collapse = collapse && build_state_network(ref->dev, s) == build_state_network(ref->dev, rep);
      for (double f = 9.6; f <= 10.2; f += 0.01) {
        const auto w = AngularFrequency::from_ghz(f);
        collapse = collapse && resp.phase(s, w) == phase_for_state(ref->dev, rep, w);
      }
    }
    v.require(collapse, "Hamming-weight collapse exact");

    const auto pulse = ProbePulse::from_duration(5.0, ref->stored.w_p, 1e-6);
    const double norm = build_mode_grid(ref->stored.w_p, pulse.bandwidth).norm_sq();
    v.require(norm >= 1.0 - 1e-6 && norm <= 1.0, "sum C^2 - 1 = " + num(norm - 1.0));

    const auto sol = evaluate_solution(ref->dev, ref->stored.w_p);
    QualityOptions fine;
    fine.points = 8001;
    const auto fine_reports = eraser_quality(ref->dev, sol, pulse, fine);
    const auto coarse = reports.empty() ? eraser_quality(ref->dev, sol, pulse) : reports;
    double conv = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      conv = std::max(conv, std::abs(coarse[i].f_numeric - fine_reports[i].f_numeric));
    }
    v.require(conv < 1e-8, "4001 vs 8001 points " + num(conv));
    return v;
  });

  report(9, "cascade vs parallel at matched chi", [&] {
    if (!ref) throw std::runtime_error("no reference solution");
    const auto ccfg = parse_cascade_config(read_json(kConfigs / "cascade_3qubit.json"));
    const auto sol = evaluate_solution(ref->dev, ref->stored.w_p);
    const auto pulse = ProbePulse::from_duration(5.0, ref->stored.w_p, 1e-6);
    const auto cmp = compare_schemes(ref->dev, sol, ccfg.device(sol.chi), pulse, CascadeKnob::kCoupling);
    const double ratio = std::abs(cmp.parallel.b) / std::abs(cmp.cascade.b);
    Verdict v;
    v.require(cmp.cascade.chi == cmp.parallel.chi, "cascade chi/2pi " + num(to_ordinary(cmp.cascade.chi) * 1e-6) + " MHz");
    v.require(ratio >= 100.0, "|b| parallel " + num(cmp.parallel.b) + " s / cascade " + num(cmp.cascade.b) +
                                  " s = " + num(ratio));
    v.require(cmp.cascade.b2 != 0.0, "cascade b' " + num(cmp.cascade.b2) + " s^2");
    v.require(cmp.quadratic_closed_error <= 1e-4,
              "same-parity F vs quadratic closed form " + num(cmp.quadratic_closed_error));
    return v;
  });

  fs::remove_all(work);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
