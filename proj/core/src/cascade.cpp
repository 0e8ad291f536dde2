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

#include "cqp/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "cqp/errors.hpp"
#include "cqp/parallel.hpp"

namespace cqp {

namespace {

AngularFrequency cavity_resonance(const Cavity& c, int bit) {
  const double w = c.frequency.rad_per_s() + (bit == 0 ? c.chi : -c.chi);
  if (!(w > 0.0)) throw NonPositiveResult("dispersive shift drives a cavity to zero frequency");
  return AngularFrequency(w);
}

// Zero of the branch reactance below the resonator pole: the series
// resonance where the reflection phase turns fastest.
double series_resonance(const NetworkElement& branch, double resonance) {
  auto x_sign = [&](double w) {
    const Reactance x = network_reactance(branch, AngularFrequency(w));
    return x.num * x.den;
  };
  double lo = 1e-3 * resonance;
  double hi = resonance * (1.0 - 1e-9);
  if (!(x_sign(lo) < 0.0 && x_sign(hi) > 0.0)) {
    throw NoSolution("cavity branch has no series resonance below its pole");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (x_sign(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Root of a decreasing-or-increasing f on [lo, hi] given opposite signs.
double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
  double flo = f(lo);
  for (int it = 0; it < 300 && hi - lo > rel_tol * std::abs(hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct SingleTuning {
  double w_p;
  double step;
  double b;
};

SingleTuning tune_probe(const CascadeDevice& dev) {
  const NetworkElement up = cavity_network(dev, 0, 0);
  const NetworkElement down = cavity_network(dev, 0, 1);
  const Cavity& c = dev.cavities().front();
  const double s_down = series_resonance(down, cavity_resonance(c, 1).rad_per_s());
  const double s_up = series_resonance(up, cavity_resonance(c, 0).rad_per_s());
  auto b = [&](double w) {
    const AngularFrequency at(w);
    return phase_derivative(up, dev.z0(), at, 1) - phase_derivative(down, dev.z0(), at, 1);
  };
  if (!(b(s_down) > 0.0 && b(s_up) < 0.0)) {
    throw NoSolution("first-derivative mismatch does not change sign between the resonances");
  }
  const double w_p = bisect(b, s_down, s_up, 1e-15);
  const AngularFrequency at(w_p);
  const double p0 = reflection_phase(up, at, dev.z0());
  const double p1 = reflection_phase(down, at, dev.z0());
  // theta_0 - theta_1 lies in (0, 2 pi): the lower (bit 1) resonance has wound further.
  return {w_p, kPi + wrap_phase(p0 - p1 - kPi), b(w_p)};
}

void require_uniform(const CascadeDevice& dev) {
  const Cavity& c0 = dev.cavities().front();
  for (const auto& c : dev.cavities()) {
    if (c.frequency != c0.frequency || c.chi != c0.chi ||
        c.coupling_capacitance != c0.coupling_capacitance) {
      throw std::invalid_argument("cascade tuning needs identical cavities");
    }
  }
}

std::vector<double> same_parity_stats(const std::vector<FidelityReport>& reps, bool same) {
  std::vector<double> out;
  for (const auto& r : reps) {
    if (r.a.weight() == r.b.weight()) continue;
    if (((r.a.weight() + r.b.weight()) % 2 == 0) == same) out.push_back(r.f_numeric);
  }
  return out;
}

void fill_extremes(SchemeSummary& s) {
  const auto same = same_parity_stats(s.reports, true);
  const auto cross = same_parity_stats(s.reports, false);
  if (!same.empty()) s.same_parity_min_f = *std::min_element(same.begin(), same.end());
  if (!cross.empty()) s.cross_parity_max_f = *std::max_element(cross.begin(), cross.end());
}

}  // namespace

CascadeDevice::CascadeDevice(std::vector<Cavity> cavities, double z0, ResonatorModel model,
                             std::optional<Band> band)
    : cavities_(std::move(cavities)), z0_(z0), model_(model), band_(band) {
  if (cavities_.empty() || cavities_.size() > kMaxQubits) {
    throw std::invalid_argument("cascade needs 1..8 cavities");
  }
  if (!(z0_ > 0.0)) throw std::invalid_argument("Z0 must be positive");
  for (const auto& c : cavities_) {
    if (!(c.chi > 0.0)) throw std::invalid_argument("chi must be positive");
    if (!(c.coupling_capacitance > 0.0)) throw std::invalid_argument("coupling must be positive");
    cavity_resonance(c, 1);
  }
  if (band_ && !(band_->lo < band_->hi)) throw std::invalid_argument("band must have lo < hi");
}

CascadeDevice CascadeDevice::uniform(std::size_t n_qubits, Cavity cavity, double z0,
                                     ResonatorModel model, std::optional<Band> band) {
  return CascadeDevice(std::vector<Cavity>(n_qubits, cavity), z0, model, band);
}

Band CascadeDevice::band() const {
  if (band_) return *band_;
  double lo = cavities_.front().frequency.rad_per_s();
  double hi = lo;
  double chi_max = 0.0;
  for (const auto& c : cavities_) {
    lo = std::min(lo, loaded_estimate({cavity_resonance(c, 1), c.coupling_capacitance}, z0_));
    hi = std::max(hi, cavity_resonance(c, 0).rad_per_s());
    chi_max = std::max(chi_max, c.chi);
  }
  const double margin = 20.0 * chi_max * static_cast<double>(cavities_.size());
  if (lo - margin <= 0.0) throw NonPositiveResult("default band reaches zero frequency");
  return {AngularFrequency(lo - margin), AngularFrequency(hi + margin)};
}

CascadeDevice CascadeDevice::with_chi(double chi) const {
  auto cav = cavities_;
  for (auto& c : cav) c.chi = chi;
  return CascadeDevice(std::move(cav), z0_, model_, band_);
}

CascadeDevice CascadeDevice::with_coupling(double farads) const {
  auto cav = cavities_;
  for (auto& c : cav) c.coupling_capacitance = farads;
  return CascadeDevice(std::move(cav), z0_, model_, band_);
}

CascadeDevice CascadeDevice::permuted(std::span<const std::size_t> order) const {
  if (order.size() != cavities_.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Cavity> cav;
  std::vector<bool> seen(order.size(), false);
  for (std::size_t k : order) {
    if (k >= order.size() || seen[k]) throw std::invalid_argument("not a permutation");
    seen[k] = true;
    cav.push_back(cavities_[k]);
  }
  return CascadeDevice(std::move(cav), z0_, model_, band_);
}

NetworkElement cavity_network(const CascadeDevice& dev, std::size_t cavity, int bit) {
  const Cavity& c = dev.cavities().at(cavity);
  return resonator_branch({c.frequency, c.coupling_capacitance}, cavity_resonance(c, bit),
                          dev.z0(), dev.model());
}

CascadeResponse::CascadeResponse(const CascadeDevice& dev, DeviceSweepOptions options)
    : dev_(dev) {
  const Band band = dev_.band();
  const double anchor = reflection_phase(cavity_network(dev_, 0, 0), band.lo, dev_.z0());
  SweepOptions sweep;
  sweep.base_points = std::max<std::size_t>(64, options.base_points);
  sweep.z0 = dev_.z0();
  const std::size_t n = dev_.n_qubits();
  std::vector<std::optional<PhaseCurve>> built(2 * n);
  parallel_for(2 * n, [&](std::size_t i) {
    built[i].emplace(cavity_network(dev_, i / 2, static_cast<int>(i % 2)), band.lo, band.hi, sweep,
                     anchor);
  });
  curves_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    curves_.push_back({std::move(*built[2 * j]), std::move(*built[2 * j + 1])});
  }
}

double CascadeResponse::single(std::size_t cavity, int bit, double w) const {
  return curves_.at(cavity)[bit == 0 ? 0 : 1](w);
}

double CascadeResponse::phase(const QubitState& state, double w) const {
  if (state.size() != dev_.n_qubits()) throw std::invalid_argument("state length != qubit count");
  double sum = 0.0;
  for (std::size_t j = 0; j < state.size(); ++j) sum += single(j, state.bit(j), w);
  return sum;
}

double CascadeResponse::phase_by_weight(std::size_t weight, double w) const {
  return phase(QubitState::with_weight(dev_.n_qubits(), weight), w);
}

double cascade_phase(const CascadeDevice& dev, const QubitState& state, AngularFrequency w) {
  return CascadeResponse(dev).phase(state, w.rad_per_s());
}

double cascade_derivative(const CascadeDevice& dev, const QubitState& state, AngularFrequency w,
                          int order) {
  if (state.size() != dev.n_qubits()) throw std::invalid_argument("state length != qubit count");
  double sum = 0.0;
  for (std::size_t j = 0; j < state.size(); ++j) {
    sum += phase_derivative(cavity_network(dev, j, state.bit(j)), dev.z0(), w, order);
  }
  return sum;
}

CascadeTuning tune_cascade(const CascadeDevice& dev_template, CascadeKnob knob) {
  require_uniform(dev_template);
  const Cavity& c = dev_template.cavities().front();
  auto device_at = [&](double x) {
    return knob == CascadeKnob::kChi ? dev_template.with_chi(x) : dev_template.with_coupling(x);
  };
  auto mismatch = [&](double log_x) {
    try {
      return tune_probe(device_at(std::exp(log_x))).step - kPi;
    } catch (const Error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  // Larger chi separates the two resonances (the step grows towards 2 pi);
  // larger coupling broadens them (the step shrinks towards 0). Walk out from
  // the template value until the step crosses pi.
  const double x0 = std::log(knob == CascadeKnob::kChi ? c.chi : c.coupling_capacitance);
  const double f0 = mismatch(x0);
  if (std::isnan(f0)) throw NoSolution("cascade template cannot be evaluated at its probe point");
  const bool grow = (f0 < 0.0) == (knob == CascadeKnob::kChi);
  const double stride = std::log(1.25) * (grow ? 1.0 : -1.0);
  double lo = x0;
  double hi = x0;
  bool bracketed = f0 == 0.0;
  for (int k = 0; k < 80 && !bracketed; ++k) {
    const double next = hi + stride;
    const double f = mismatch(next);
    if (std::isnan(f)) break;
    lo = hi;
    hi = next;
    bracketed = (f < 0.0) != (f0 < 0.0) || f == 0.0;
  }
  if (!bracketed) throw NoSolution("no knob value gives a pi phase step per cavity");
  if (lo > hi) std::swap(lo, hi);
  const double x = std::exp(bisect(mismatch, lo, hi, 1e-15));
  CascadeDevice dev = device_at(x);
  const SingleTuning t = tune_probe(dev);
  return {std::move(dev), AngularFrequency(t.w_p), t.step, t.b};
}

SchemeComparison compare_schemes(const ParityDevice& parallel_dev, const EraserSolution& sol,
                                 const CascadeDevice& cascade_template, const ProbePulse& pulse,
                                 CascadeKnob knob, const QualityOptions& options) {
  if (parallel_dev.n_qubits() != cascade_template.n_qubits()) {
    throw std::invalid_argument("both schemes must address the same number of qubits");
  }
  const std::size_t n = parallel_dev.n_qubits();

  SchemeSummary par;
  par.name = "parallel";
  par.resonators = parallel_dev.n_modes();
  par.w_p = sol.w_p;
  par.chi = sol.chi;
  par.residuals = sol.residuals;
  par.delta_theta = sol.delta_theta;
  const DispersionReport disp = dispersion_report(parallel_dev, sol);
  par.b = disp.max_abs_b();
  par.b2 = disp.max_abs_b2();
  par.reports = eraser_quality(parallel_dev, sol,
                               ProbePulse(pulse.alpha, sol.w_p, pulse.bandwidth), options);
  fill_extremes(par);

  const CascadeDevice tmpl =
      knob == CascadeKnob::kCoupling ? cascade_template.with_chi(sol.chi) : cascade_template;
  CascadeTuning tuning = tune_cascade(tmpl, knob);
  const CascadeDevice& cdev = tuning.device;
  const CascadeResponse resp(cdev, options.sweep);
  const ProbePulse cpulse(pulse.alpha, tuning.w_p, pulse.bandwidth);
  const ModeGrid grid =
      build_mode_grid(cpulse.w_p, cpulse.bandwidth, options.span_sigmas, options.points);

  SchemeSummary cas;
  cas.name = "cascade";
  cas.resonators = cdev.n_qubits();
  cas.w_p = tuning.w_p;
  cas.chi = cdev.cavities().front().chi;
  const double wp = tuning.w_p.rad_per_s();
  std::vector<double> theta(n + 1), d1(n + 1), d2(n + 1);
  for (std::size_t w = 0; w <= n; ++w) {
    const QubitState s = QubitState::with_weight(n, w);
    theta[w] = resp.phase(s, wp);
    d1[w] = cascade_derivative(cdev, s, tuning.w_p, 1);
    d2[w] = cascade_derivative(cdev, s, tuning.w_p, 2);
  }
  for (const auto& [a, b] : residual_pairs(n)) cas.residuals.push_back(theta[a] - theta[b] - kTwoPi);
  cas.delta_theta = wrap_phase(theta[0] - theta[1]);

  SchemeComparison out{std::move(par), {}, std::move(tuning), 0.0};
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = a; b <= n; ++b) {
      FidelityReport rep{QubitState::with_weight(n, a), QubitState::with_weight(n, b), 1.0,
                         std::nullopt, FidelityBranch::kSameParityQuadratic};
      if (a != b) {
        rep.f_numeric = fidelity_numeric([&](double w) { return resp.phase_by_weight(a, w); },
                                         [&](double w) { return resp.phase_by_weight(b, w); },
                                         cpulse, grid);
      }
      if ((b - a) % 2 == 0) {
        if (a != b) {
          cas.b = std::max(cas.b, std::abs(d1[a] - d1[b]));
          cas.b2 = std::max(cas.b2, std::abs(d2[a] - d2[b]));
        }
        rep.f_closed =
            fidelity_quadratic_closed(cpulse.alpha, 0.5 * (d2[a] - d2[b]), cpulse.bandwidth).value;
        out.quadratic_closed_error =
            std::max(out.quadratic_closed_error, std::abs(rep.f_numeric - *rep.f_closed));
      } else {
        rep.branch = FidelityBranch::kEvenOdd;
        rep.f_closed = fidelity_even_odd(cpulse.alpha, cas.delta_theta);
      }
      cas.reports.push_back(std::move(rep));
    }
  }
  fill_extremes(cas);
  out.cascade = std::move(cas);
  return out;
}

}  // namespace cqp
