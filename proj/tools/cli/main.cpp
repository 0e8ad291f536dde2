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

// cqparity: design and analysis of multi-qubit parity measurements by
// reflection-phase engineering.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace cqp::cli;
  CLI::App app{"Reflection-phase parity measurement toolkit"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Per-weight reflection phase over the device band (CSV)");
  s->add_option("--config", sweep.config, "Device config (JSON)")->required();
  s->add_option("--solution", sweep.solution, "Solution JSON supplying chi and modes");
  s->add_option("--out", sweep.out, "CSV output path (default: stdout)");
  s->add_option("--points", sweep.points, "Uniform frequency rows")->capture_default_str();

  SolveArgs solve;
  auto* so = app.add_subcommand("solve", "Solve the eraser conditions for w_p and chi");
  so->add_option("--config", solve.config, "Device config (JSON)")->required();
  so->add_option("--tol", solve.tol, "Residual tolerance, rad")->capture_default_str();
  so->add_option("--out", solve.out, "Solution JSON output path");

  FidelityArgs fid;
  auto* f = app.add_subcommand("fidelity", "Pairwise output-state overlaps for a solved device");
  f->add_option("--config", fid.config, "Device config (JSON)")->required();
  f->add_option("--solution", fid.solution, "Solution JSON")->required();
  f->add_option("--alpha-sq", fid.alpha_sq, "Mean photon number")->capture_default_str();
  f->add_option("--T-us", fid.t_us, "Pulse duration 1/W, microseconds")->capture_default_str();
  f->add_option("--points", fid.points, "Mode-grid points")->capture_default_str();
  f->add_option("--out", fid.out_json, "JSON output path (default: stdout)");
  f->add_option("--csv", fid.out_csv, "CSV output path");

  CompareArgs cmp;
  auto* c = app.add_subcommand("compare", "Parallel multi-resonance vs cascaded cavities");
  c->add_option("--config", cmp.config, "Parallel device config (JSON)")->required();
  c->add_option("--solution", cmp.solution, "Parallel solution JSON")->required();
  c->add_option("--cascade", cmp.cascade, "Cascade config (JSON)")->required();
  c->add_option("--alpha-sq", cmp.alpha_sq, "Mean photon number")->capture_default_str();
  c->add_option("--T-us", cmp.t_us, "Pulse duration, microseconds")->capture_default_str();
  c->add_option("--out", cmp.out, "JSON output path (default: stdout)");

  EstimateArgs est;
  auto* e = app.add_subcommand("estimate", "Purcell T1, measurement time and probe power");
  e->add_option("--delta-GHz", est.delta_ghz, "Qubit-cavity detuning / 2pi")->capture_default_str();
  e->add_option("--kappa-MHz", est.kappa_mhz, "Cavity loss rate / 2pi")->capture_default_str();
  e->add_option("--chi-MHz", est.chi_mhz, "Dispersive shift / 2pi")->capture_default_str();
  e->add_option("--alpha-sq", est.alpha_sq, "Mean photon number")->capture_default_str();
  e->add_option("--T-us", est.t_us, "Pulse duration, microseconds")->capture_default_str();
  e->add_option("--fp-GHz", est.fp_ghz, "Probe frequency / 2pi")->capture_default_str();
  e->add_option("--safety", est.safety, "Measurement time in units of 1/chi")->capture_default_str();
  e->add_option("--Cc-fF", est.cc_ff, "Coupling capacitance for the kappa estimate")->capture_default_str();
  e->add_option("--Z0", est.z0, "Line impedance, ohms")->capture_default_str();
  e->add_option("--fr-GHz", est.fr_ghz, "Resonator frequency for the kappa estimate")->capture_default_str();
  e->add_flag("--json", est.json, "Print JSON instead of a table");
  e->add_option("--out", est.out, "JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kConfigError;
  }

  auto run = [&](auto&& fn, const auto& args) {
    return run_command([&] { return fn(args, std::cout, std::cerr); }, std::cerr);
  };
  if (s->parsed()) return run(cmd_sweep, sweep);
  if (so->parsed()) return run(cmd_solve, solve);
  if (f->parsed()) return run(cmd_fidelity, fid);
  if (c->parsed()) return run(cmd_compare, cmp);
  return run(cmd_estimate, est);
}
