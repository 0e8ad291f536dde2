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

#include "cqp/eraser.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cqp/errors.hpp"
#include "cqp/parallel.hpp"

namespace cqp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Scale of the probe-frequency unknown inside the optimizer: 1 MHz.
const double kProbeScale = to_angular(1e6);

double norm2(const std::vector<double>& r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::sqrt(s);
}

double max_abs(const std::vector<double>& r) {
  double m = 0.0;
  for (double v : r) m = std::max(m, std::abs(v));
  return m;
}

// Mode layout from consecutive spacings. The middle mode (odd m) or the
// midpoint of the middle pair (even m) stays where the template put it.
class ModeLayout {
 public:
  explicit ModeLayout(const ParityDevice& tmpl) : m_(tmpl.n_modes()) {
    const auto& modes = tmpl.modes();
    center_ = centre_of(freqs_of(modes));
  }

  std::size_t spacings() const noexcept { return m_ - 1; }

  std::vector<AngularFrequency> frequencies(const std::vector<double>& spacing) const {
    std::vector<double> pos(m_, 0.0);
    for (std::size_t k = 1; k < m_; ++k) pos[k] = pos[k - 1] + spacing[k - 1];
    const double shift = center_ - centre_of(pos);
    std::vector<AngularFrequency> out;
    out.reserve(m_);
    for (double p : pos) out.emplace_back(p + shift);
    return out;
  }

 private:
  static std::vector<double> freqs_of(const std::vector<Mode>& modes) {
    std::vector<double> f;
    for (const auto& m : modes) f.push_back(m.frequency.rad_per_s());
    return f;
  }
  static double centre_of(const std::vector<double>& f) {
    const std::size_t m = f.size();
    return m % 2 == 1 ? f[m / 2] : 0.5 * (f[m / 2 - 1] + f[m / 2]);
  }

  std::size_t m_;
  double center_;
};

// Evaluates residuals for (w_p, chi, modes), rebuilding the phase curves only
// when chi or the modes change. With `contrast` set, cos((theta_0 - theta_1)/2)
// is appended; it vanishes exactly when the parities differ by pi.
class ResidualModel {
 public:
  ResidualModel(ParityDevice base, DeviceSweepOptions sweep, bool contrast = false)
      : base_(std::move(base)), sweep_(sweep), contrast_(contrast) {}

  std::vector<double> operator()(double w_p, double chi,
                                 const std::vector<AngularFrequency>& modes) {
    if (!resp_ || chi != chi_ || modes != modes_) {
      ParityDevice dev = base_.with_chi(chi);
      if (!modes.empty()) dev = dev.with_mode_frequencies(modes);
      resp_ = std::make_unique<DeviceResponse>(dev, sweep_);
      chi_ = chi;
      modes_ = modes;
    }
    const AngularFrequency w(w_p);
    auto r = eraser_residuals(*resp_, w);
    if (contrast_) {
      r.push_back(std::cos(0.5 * (resp_->phase_by_weight(0, w) - resp_->phase_by_weight(1, w))));
    }
    return r;
  }

 private:
  ParityDevice base_;
  DeviceSweepOptions sweep_;
  bool contrast_;
  std::unique_ptr<DeviceResponse> resp_;
  double chi_ = 0.0;
  std::vector<AngularFrequency> modes_;
};

using Vec = Eigen::VectorXd;
using ResidualFn = std::function<std::optional<Vec>(const Vec&)>;

struct LmResult {
  Vec x;
  double norm = kInf;
  double max_abs = kInf;
};

// Levenberg-Marquardt with forward-difference Jacobians. Works for square,
// over- and under-determined systems; failures of the residual function are
// treated as rejected steps.
LmResult levenberg_marquardt(const ResidualFn& f, Vec x, const Vec& fd_step, double tol,
                             std::size_t max_iterations) {
  LmResult out;
  auto r0 = f(x);
  if (!r0) return out;
  Vec r = *r0;
  double cost = r.norm();
  double lambda = 1e-3;
  const Eigen::Index n = x.size();
  for (std::size_t it = 0; it < max_iterations; ++it) {
    if (r.size() == 0 || r.cwiseAbs().maxCoeff() < 1e-3 * tol) break;
    Eigen::MatrixXd jac(r.size(), n);
    bool jac_ok = true;
    for (Eigen::Index j = 0; j < n && jac_ok; ++j) {
      Vec xp = x;
      xp[j] += fd_step[j];
      auto rp = f(xp);
      if (!rp) {
        xp[j] = x[j] - fd_step[j];
        rp = f(xp);
        if (!rp) {
          jac_ok = false;
          break;
        }
        jac.col(j) = (r - *rp) / fd_step[j];
      } else {
        jac.col(j) = (*rp - r) / fd_step[j];
      }
    }
    if (!jac_ok) break;

    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Vec grad = jac.transpose() * r;
    const double floor = 1e-12 * std::max(jtj.diagonal().maxCoeff(), 1e-300);
    bool accepted = false;
    while (lambda < 1e12) {
      Eigen::MatrixXd a = jtj;
      for (Eigen::Index k = 0; k < n; ++k) a(k, k) += lambda * std::max(jtj(k, k), floor);
      const Vec step = a.ldlt().solve(-grad);
      if (!step.allFinite()) {
        lambda *= 10.0;
        continue;
      }
      const Vec xn = x + step;
      auto rn = f(xn);
      if (rn && rn->norm() < cost) {
        x = xn;
        r = *rn;
        cost = rn->norm();
        lambda = std::max(lambda * 0.1, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!accepted) break;
  }
  out.x = x;
  out.norm = cost;
  out.max_abs = r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
  return out;
}

struct GridCell {
  double w_p;
  double chi;
  double score;
};

struct Point {
  double w_p;
  double chi;
  std::vector<AngularFrequency> modes;  // empty: template modes
  double norm;
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  auto v = linspace(std::log(lo), std::log(hi), n);
  for (double& x : v) x = std::exp(x);
  return v;
}

// Coarse scan; returns local minima of the residual norm, best first.
std::vector<GridCell> grid_minima(const ParityDevice& base, const std::vector<AngularFrequency>& modes,
                                  const Band& search, const SolveOptions& opt) {
  const std::size_t n = opt.grid_points;
  const auto ws = linspace(search.lo.rad_per_s(), search.hi.rad_per_s(), n);
  const auto chis = logspace(opt.chi_lo, opt.chi_hi, n);
  std::vector<double> score(n * n, kInf);
  parallel_for(n, [&](std::size_t i) {
    ResidualModel model(base, opt.sweep);
    for (std::size_t j = 0; j < n; ++j) {
      try {
        score[i * n + j] = norm2(model(ws[j], chis[i], modes));
      } catch (const Error&) {
      } catch (const std::invalid_argument&) {
      } catch (const std::out_of_range&) {
      }
    }
  });

  std::vector<GridCell> minima;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double s = score[i * n + j];
      if (!std::isfinite(s)) continue;
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const long ii = static_cast<long>(i) + di;
          const long jj = static_cast<long>(j) + dj;
          if (ii < 0 || jj < 0 || ii >= static_cast<long>(n) || jj >= static_cast<long>(n)) continue;
          const double t = score[static_cast<std::size_t>(ii) * n + static_cast<std::size_t>(jj)];
          // Ties go to the earlier cell so plateaus yield one candidate.
          const bool earlier = di < 0 || (di == 0 && dj < 0);
          if (t < s || (t == s && earlier)) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) minima.push_back({ws[j], chis[i], s});
    }
  }
  std::stable_sort(minima.begin(), minima.end(),
                   [](const GridCell& a, const GridCell& b) { return a.score < b.score; });
  return minima;
}

template <class F>
std::optional<Vec> guarded(F&& f) {
  try {
    return f();
  } catch (const Error&) {
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  return std::nullopt;
}

Vec to_vec(const std::vector<double>& v) {
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Probe inside the search band and chi inside the configured range.
bool inside(const Band& search, const SolveOptions& opt, double w, double log_chi) {
  return w > search.lo.rad_per_s() && w < search.hi.rad_per_s() &&
         log_chi >= std::log(opt.chi_lo) && log_chi <= std::log(opt.chi_hi);
}

// Refines (w_p, chi) with the modes held fixed.
Point refine_fixed(const ParityDevice& base, const std::vector<AngularFrequency>& modes,
                   const GridCell& start, const Band& search, const SolveOptions& opt) {
  ResidualModel model(base, opt.sweep);
  auto f = [&](const Vec& x) -> std::optional<Vec> {
    const double w = x[0] * kProbeScale;
    if (!inside(search, opt, w, x[1])) return std::nullopt;
    return guarded([&] { return to_vec(model(w, std::exp(x[1]), modes)); });
  };
  Vec x0(2);
  x0 << start.w_p / kProbeScale, std::log(start.chi);
  Vec steps(2);
  steps << 1e-6, 1e-7;
  const LmResult r = levenberg_marquardt(f, x0, steps, opt.tol, opt.max_iterations);
  if (!std::isfinite(r.norm)) return {start.w_p, start.chi, modes, kInf};
  return {r.x[0] * kProbeScale, std::exp(r.x[1]), modes, r.norm};
}

// Refines (w_p, chi, every mode spacing) jointly. The roots then form a
// continuum; with `contrast` set the extra freedom is spent on driving the
// parity contrast to pi.
Point refine_joint(const ParityDevice& base, const ModeLayout& layout, const Point& start,
                   const Band& search, const SolveOptions& opt, bool contrast) {
  ResidualModel model(base, opt.sweep, contrast);
  const std::size_t ns = layout.spacings();
  auto f = [&](const Vec& x) -> std::optional<Vec> {
    const double w = x[0] * kProbeScale;
    if (!inside(search, opt, w, x[1])) return std::nullopt;
    std::vector<double> sp(ns);
    for (std::size_t k = 0; k < ns; ++k) sp[k] = std::exp(x[2 + static_cast<Eigen::Index>(k)]);
    return guarded([&] { return to_vec(model(w, std::exp(x[1]), layout.frequencies(sp))); });
  };
  Vec x0(2 + static_cast<Eigen::Index>(ns));
  x0[0] = start.w_p / kProbeScale;
  x0[1] = std::log(start.chi);
  for (std::size_t k = 0; k < ns; ++k) {
    x0[2 + static_cast<Eigen::Index>(k)] =
        std::log(start.modes[k + 1].rad_per_s() - start.modes[k].rad_per_s());
  }
  Vec steps = Vec::Constant(x0.size(), 1e-7);
  steps[0] = 1e-6;
  const LmResult r = levenberg_marquardt(f, x0, steps, opt.tol, opt.max_iterations);
  if (!std::isfinite(r.norm)) return {start.w_p, start.chi, start.modes, kInf};
  std::vector<double> sp(ns);
  for (std::size_t k = 0; k < ns; ++k) sp[k] = std::exp(r.x[2 + static_cast<Eigen::Index>(k)]);
  return {r.x[0] * kProbeScale, std::exp(r.x[1]), layout.frequencies(sp), r.norm};
}

Band analysis_band(const ParityDevice& tmpl, const SolveOptions& opt) {
  if (tmpl.has_explicit_band()) return tmpl.band();
  Band b = tmpl.with_chi(opt.chi_hi).default_band();
  if (opt.free == FreeParameters::kChiAndModes && tmpl.n_modes() > 1) {
    const double extra = opt.spacing_hi * static_cast<double>(tmpl.n_modes());
    const double lo = b.lo.rad_per_s() - extra;
    if (lo <= 0.0) throw NonPositiveResult("analysis band reaches zero frequency");
    b = {AngularFrequency(lo), AngularFrequency(b.hi.rad_per_s() + extra)};
  }
  return b;
}

double distinguishability(double delta_theta) { return std::abs(std::sin(0.5 * delta_theta)); }

std::string describe(const ParityDevice& dev) {
  std::ostringstream os;
  os << dev.n_qubits() << " qubits on " << dev.n_modes() << " mode(s)";
  return os.str();
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> residual_pairs(std::size_t n_qubits) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t start = 0; start < 2; ++start) {
    for (std::size_t i = start; i + 2 <= n_qubits; i += 2) pairs.emplace_back(i, i + 2);
  }
  return pairs;
}

std::vector<double> eraser_residuals(const DeviceResponse& response, AngularFrequency w_p) {
  const std::size_t n = response.device().n_qubits();
  std::vector<double> theta(n + 1);
  for (std::size_t w = 0; w <= n; ++w) theta[w] = response.phase_by_weight(w, w_p);
  std::vector<double> out;
  for (const auto& [a, b] : residual_pairs(n)) out.push_back(theta[a] - theta[b] - kTwoPi);
  return out;
}

std::vector<double> eraser_residuals(const ParityDevice& dev, AngularFrequency w_p) {
  return eraser_residuals(DeviceResponse(dev), w_p);
}

double EraserSolution::max_residual() const { return max_abs(residuals); }

double DispersionReport::max_abs_b() const {
  double m = 0.0;
  for (const auto* list : {&even, &odd}) {
    for (const auto& e : *list) m = std::max(m, std::abs(e.b));
  }
  return m;
}

double DispersionReport::max_abs_b2() const {
  double m = 0.0;
  for (const auto* list : {&even, &odd}) {
    for (const auto& e : *list) m = std::max(m, std::abs(e.b2));
  }
  return m;
}

void check_feasibility(const ParityDevice& dev) {
  const std::size_t need = required_modes(dev.n_qubits());
  if (dev.n_modes() < need) {
    std::ostringstream os;
    os << "infeasible: " << describe(dev) << "; the reflection phase must wind by at least n*pi = "
       << dev.n_qubits() << " pi across the band, and each mode contributes 2 pi, so at least "
       << need << " modes are required";
    throw NoSolution(os.str());
  }
}

ParityDevice solved_device(const ParityDevice& dev_template, const EraserSolution& sol) {
  ParityDevice dev = dev_template.with_chi(sol.chi);
  if (!sol.mode_frequencies.empty()) dev = dev.with_mode_frequencies(sol.mode_frequencies);
  return dev;
}

DispersionReport dispersion_report(const ParityDevice& dev, const EraserSolution& sol) {
  const std::size_t n = dev.n_qubits();
  std::vector<double> d1(n + 1), d2(n + 1);
  parallel_for(n + 1, [&](std::size_t w) {
    const QubitState s = QubitState::with_weight(n, w);
    d1[w] = phase_derivatives(dev, s, sol.w_p, 1);
    d2[w] = phase_derivatives(dev, s, sol.w_p, 2);
  });
  DispersionReport rep;
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = a + 2; b <= n; b += 2) {
      DispersionEntry e{a, b, d1[a] - d1[b], d2[a] - d2[b]};
      (a % 2 == 0 ? rep.even : rep.odd).push_back(e);
    }
  }
  return rep;
}

EraserSolution evaluate_solution(const ParityDevice& dev, AngularFrequency w_p,
                                 const DeviceSweepOptions& sweep) {
  const DeviceResponse resp(dev, sweep);
  const std::size_t n = dev.n_qubits();
  EraserSolution sol;
  sol.w_p = w_p;
  sol.chi = dev.common_chi();
  for (const auto& m : dev.modes()) sol.mode_frequencies.push_back(m.frequency);
  for (std::size_t w = 0; w <= n; ++w) sol.theta_by_weight.push_back(resp.phase_by_weight(w, w_p));
  sol.residuals = eraser_residuals(resp, w_p);
  sol.delta_theta = wrap_phase(sol.theta_by_weight[0] - sol.theta_by_weight[1]);
  sol.low_contrast = distinguishability(sol.delta_theta) < kLowContrast;
  const DispersionReport rep = dispersion_report(dev, sol);
  sol.dispersion_b = rep.max_abs_b();
  sol.dispersion_b2 = rep.max_abs_b2();
  return sol;
}

double contrast(const EraserSolution& sol) {
  if (sol.theta_by_weight.size() < 2) throw std::invalid_argument("solution has no odd weight");
  const double d = wrap_phase(sol.theta_by_weight[0] - sol.theta_by_weight[1]);
  if (d == 0.0) throw EraserDegenerate("even and odd parities reflect with equal phase");
  return d;
}

EraserSolution solve_eraser(const ParityDevice& dev_template, const SolveOptions& opt) {
  if (!dev_template.equal_chi()) throw std::invalid_argument("solver needs an equal-chi device");
  if (!(opt.tol >= 1e-9)) throw std::invalid_argument("tol must be >= 1e-9 rad");
  if (opt.grid_points < 3) throw std::invalid_argument("grid needs at least 3 points per axis");
  if (!(opt.chi_lo > 0.0 && opt.chi_lo < opt.chi_hi)) throw std::invalid_argument("bad chi range");
  check_feasibility(dev_template);

  const Band band = analysis_band(dev_template, opt);
  const ParityDevice base = dev_template.with_band(band);
  Band search = opt.search_band.value_or(band);
  if (search.lo < band.lo || search.hi > band.hi || !(search.lo < search.hi)) {
    throw std::invalid_argument("search band must lie inside the analysis band");
  }
  // Keep probes strictly inside the sampled window.
  {
    const double pad = 1e-9 * search.hi.rad_per_s();
    search = {AngularFrequency(search.lo.rad_per_s() + pad),
              AngularFrequency(search.hi.rad_per_s() - pad)};
  }

  const std::size_t n = base.n_qubits();
  if (residual_pairs(n).empty()) {
    // No conditions to meet: pick the most distinguishable grid point.
    const auto ws = linspace(search.lo.rad_per_s(), search.hi.rad_per_s(), opt.grid_points);
    const auto chis = logspace(opt.chi_lo, opt.chi_hi, opt.grid_points);
    std::vector<double> best(opt.grid_points, -1.0);
    std::vector<std::size_t> arg(opt.grid_points, 0);
    parallel_for(opt.grid_points, [&](std::size_t i) {
      const DeviceResponse resp(base.with_chi(chis[i]), opt.sweep);
      for (std::size_t j = 0; j < ws.size(); ++j) {
        const AngularFrequency w(ws[j]);
        const double d = distinguishability(resp.phase_by_weight(0, w) - resp.phase_by_weight(1, w));
        if (d > best[i]) {
          best[i] = d;
          arg[i] = j;
        }
      }
    });
    const std::size_t i = static_cast<std::size_t>(
        std::max_element(best.begin(), best.end()) - best.begin());
    EraserSolution sol = evaluate_solution(base.with_chi(chis[i]), AngularFrequency(ws[arg[i]]),
                                           opt.sweep);
    sol.roots_found = 1;
    return sol;
  }

  const bool free_modes = opt.free == FreeParameters::kChiAndModes && base.n_modes() > 1;
  std::vector<Point> attempts;
  std::optional<SearchCandidate> best_grid;

  auto note_grid = [&](const std::vector<GridCell>& minima) {
    if (!minima.empty() && (!best_grid || minima.front().score < best_grid->residual_norm)) {
      best_grid = SearchCandidate{minima.front().w_p, minima.front().chi, minima.front().score};
    }
  };

  auto refine_all = [&](const std::vector<AngularFrequency>& modes, std::vector<GridCell> minima) {
    std::erase_if(minima, [](const GridCell& c) { return !(c.score < 1.0); });
    if (minima.size() > opt.max_candidates) minima.resize(opt.max_candidates);
    std::vector<Point> out(minima.size());
    parallel_for(minima.size(), [&](std::size_t k) {
      out[k] = refine_fixed(base, modes, minima[k], search, opt);
    });
    return out;
  };

  if (!free_modes) {
    auto minima = grid_minima(base, {}, search, opt);
    note_grid(minima);
    attempts = refine_all({}, std::move(minima));
  } else {
    const ModeLayout layout(base);
    const auto spacings = logspace(opt.spacing_lo, opt.spacing_hi, std::max<std::size_t>(opt.spacing_points, 2));
    std::vector<Point> symmetric;
    for (double d : spacings) {
      std::vector<AngularFrequency> modes;
      try {
        modes = layout.frequencies(std::vector<double>(layout.spacings(), d));
      } catch (const std::invalid_argument&) {
        continue;
      }
      auto minima = grid_minima(base, modes, search, opt);
      note_grid(minima);
      for (auto& p : refine_all(modes, std::move(minima))) symmetric.push_back(std::move(p));
    }
    std::stable_sort(symmetric.begin(), symmetric.end(),
                     [](const Point& a, const Point& b) { return a.norm < b.norm; });
    std::erase_if(symmetric, [](const Point& p) { return !std::isfinite(p.norm); });
    if (symmetric.size() > opt.max_candidates) symmetric.resize(opt.max_candidates);
    std::vector<Point> joint(2 * symmetric.size());
    parallel_for(symmetric.size(), [&](std::size_t k) {
      joint[2 * k] = refine_joint(base, layout, symmetric[k], search, opt, false);
      if (std::isfinite(joint[2 * k].norm)) {
        joint[2 * k + 1] = refine_joint(base, layout, joint[2 * k], search, opt, true);
      } else {
        joint[2 * k + 1] = joint[2 * k];
      }
    });
    attempts = std::move(symmetric);
    for (auto& p : joint) attempts.push_back(std::move(p));
  }

  // Re-evaluate every converged point from scratch and keep the verified ones.
  std::vector<std::optional<EraserSolution>> verified(attempts.size());
  parallel_for(attempts.size(), [&](std::size_t k) {
    const Point& p = attempts[k];
    if (!(p.norm < opt.tol)) return;
    try {
      ParityDevice dev = base.with_chi(p.chi);
      if (!p.modes.empty()) dev = dev.with_mode_frequencies(p.modes);
      EraserSolution sol = evaluate_solution(dev, AngularFrequency(p.w_p), opt.sweep);
      if (sol.max_residual() < opt.tol && sol.delta_theta != 0.0) verified[k] = std::move(sol);
    } catch (const Error&) {
    } catch (const std::invalid_argument&) {
    }
  });

  std::vector<EraserSolution> roots;
  for (auto& v : verified) {
    if (!v) continue;
    const bool dup = std::any_of(roots.begin(), roots.end(), [&](const EraserSolution& r) {
      return std::abs(r.w_p.rad_per_s() - v->w_p.rad_per_s()) < to_angular(1e3) &&
             std::abs(r.chi - v->chi) < 1e-6 * r.chi;
    });
    if (!dup) roots.push_back(std::move(*v));
  }

  if (roots.empty()) {
    std::optional<SearchCandidate> best = best_grid;
    for (const auto& p : attempts) {
      if (std::isfinite(p.norm) && (!best || p.norm < best->residual_norm)) {
        best = SearchCandidate{p.w_p, p.chi, p.norm};
      }
    }
    std::ostringstream os;
    os << "no probe frequency and chi satisfy the eraser conditions for " << describe(base);
    if (!best_grid || !(best_grid->residual_norm < 1.0)) {
      os << " (no grid cell has residual norm below 1 rad)";
    } else {
      os << " (refinement did not reach tol = " << opt.tol << " rad)";
    }
    throw NoSolution(os.str(), best);
  }

  auto better = [](const EraserSolution& a, const EraserSolution& b) {
    const double da = distinguishability(a.delta_theta);
    const double db = distinguishability(b.delta_theta);
    if (std::abs(da - db) > 1e-12) return da > db;
    if (a.w_p != b.w_p) return a.w_p < b.w_p;
    return a.chi < b.chi;
  };
  EraserSolution best = *std::min_element(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
    return better(a, b);
  });
  best.roots_found = roots.size();

  const ParityDevice dev = solved_device(base, best);
  for (std::size_t w = 0; w <= n; ++w) {
    const double p = reflection_phase(build_state_network(dev, QubitState::with_weight(n, w)),
                                      best.w_p, dev.z0());
    if (std::abs(wrap_phase(p)) < 10.0 * opt.tol) {
      throw PoleCollision("probe frequency coincides with a reflection pole of weight " +
                          std::to_string(w));
    }
  }
  return best;
}

}  // namespace cqp
