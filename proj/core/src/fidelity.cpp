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

#include "cqp/fidelity.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

#include "cqp/parallel.hpp"

namespace cqp {

namespace {

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

ProbePulse::ProbePulse(std::complex<double> a, AngularFrequency w, double bw)
    : alpha(a), w_p(w), bandwidth(bw) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw std::invalid_argument("pulse bandwidth must be positive");
  }
}

ProbePulse ProbePulse::from_duration(double alpha_sq, AngularFrequency w_p, double seconds) {
  if (!(alpha_sq >= 0.0)) throw std::invalid_argument("|alpha|^2 must be >= 0");
  if (!(seconds > 0.0)) throw std::invalid_argument("pulse duration must be positive");
  return ProbePulse(std::sqrt(alpha_sq), w_p, 1.0 / seconds);
}

double ModeGrid::norm_sq() const {
  std::vector<double> sq(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) sq[i] = weights[i] * weights[i];
  return pairwise_sum(sq);
}

ModeGrid build_mode_grid(AngularFrequency w_p, double bandwidth, double span_sigmas,
                         std::size_t points) {
  if (!(bandwidth > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  if (!(span_sigmas >= 6.0)) throw std::invalid_argument("span must cover at least 6 sigma");
  if (points < 201 || points % 2 == 0) {
    throw std::invalid_argument("mode grid needs an odd number of points >= 201");
  }
  ModeGrid g;
  const double centre = w_p.rad_per_s();
  const long half = static_cast<long>(points / 2);
  g.spacing = span_sigmas * bandwidth / static_cast<double>(half);
  const double norm = std::sqrt(g.spacing) / std::pow(kTwoPi * bandwidth * bandwidth, 0.25);
  g.frequencies.resize(points);
  g.weights.resize(points);
  for (long k = -half; k <= half; ++k) {
    const double x = static_cast<double>(k) * g.spacing;
    const auto i = static_cast<std::size_t>(k + half);
    g.frequencies[i] = centre + x;
    g.weights[i] = norm * std::exp(-x * x / (4.0 * bandwidth * bandwidth));
  }
  return g;
}

double fidelity_numeric(const PhaseFunction& theta_s, const PhaseFunction& theta_s2,
                        const ProbePulse& pulse, const ModeGrid& grid) {
  const double photons = pulse.photons();
  std::vector<double> terms(grid.frequencies.size());
  parallel_for(terms.size(), [&](std::size_t i) {
    const double w = grid.frequencies[i];
    const double d = theta_s(w) - theta_s2(w);
    const double c = grid.weights[i];
    terms[i] = photons * c * c * (1.0 - std::cos(d));
  });
  return std::exp(-pairwise_sum(terms));
}

ClosedForm fidelity_linear_closed(std::complex<double> alpha, double b, double bandwidth) {
  const double a2 = std::norm(alpha);
  const double x = b * bandwidth;
  ClosedForm out{std::exp(-a2 * -std::expm1(-0.5 * x * x)), std::nullopt};
  if (std::abs(alpha) * std::abs(x) < 0.1) out.expansion = 1.0 - 0.5 * a2 * x * x;
  return out;
}

double fidelity_even_odd(std::complex<double> alpha, double delta_theta) {
  return std::exp(-std::norm(alpha) * (1.0 - std::cos(delta_theta)));
}

ClosedForm fidelity_quadratic_closed(std::complex<double> alpha, double b2, double bandwidth) {
  const double a2 = std::norm(alpha);
  const double u = b2 * bandwidth * bandwidth;
  const std::complex<double> z = 1.0 / std::sqrt(std::complex<double>(1.0, 2.0 * u));
  ClosedForm out{std::abs(std::exp(-a2 * (1.0 - z))), std::nullopt};
  if (std::abs(alpha) * std::abs(u) < 0.1) out.expansion = 1.0 - 1.5 * a2 * u * u;
  return out;
}

double fidelity_quadratic_radical(std::complex<double> alpha, double b2, double bandwidth) {
  const double u = b2 * bandwidth * bandwidth;
  const double q = 4.0 * u * u;
  return std::exp(-std::norm(alpha) * (1.0 - std::sqrt((1.0 + std::sqrt(1.0 + q)) / (2.0 + 2.0 * q))));
}

std::string_view to_string(FidelityBranch branch) noexcept {
  switch (branch) {
    case FidelityBranch::kSameParityLinear: return "same-parity-linear";
    case FidelityBranch::kSameParityQuadratic: return "same-parity-quadratic";
    case FidelityBranch::kEvenOdd: return "even-odd";
  }
  return "unknown";
}

std::vector<FidelityReport> eraser_quality(const ParityDevice& dev, const EraserSolution& sol,
                                           const ProbePulse& pulse,
                                           const QualityOptions& options) {
  const std::size_t n = dev.n_qubits();
  const DeviceResponse resp(dev, options.sweep);
  const ModeGrid grid = build_mode_grid(pulse.w_p, pulse.bandwidth, options.span_sigmas,
                                        options.points);
  const DispersionReport disp = dispersion_report(dev, sol);
  auto b_of = [&](std::size_t a, std::size_t b) {
    for (const auto* list : {&disp.even, &disp.odd}) {
      for (const auto& e : *list) {
        if (e.weight_a == a && e.weight_b == b) return e.b;
      }
    }
    return 0.0;
  };

  std::vector<FidelityReport> out;
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = a; b <= n; ++b) {
      const PhaseCurve& ca = resp.curve_for_weight(a);
      const PhaseCurve& cb = resp.curve_for_weight(b);
      FidelityReport rep{QubitState::with_weight(n, a), QubitState::with_weight(n, b), 1.0,
                         std::nullopt, FidelityBranch::kSameParityLinear};
      if (a != b) {
        rep.f_numeric = fidelity_numeric([&](double w) { return ca(w); },
                                         [&](double w) { return cb(w); }, pulse, grid);
      }
      if ((b - a) % 2 == 0) {
        rep.f_closed = fidelity_linear_closed(pulse.alpha, b_of(a, b), pulse.bandwidth).value;
      } else {
        rep.branch = FidelityBranch::kEvenOdd;
        rep.f_closed = fidelity_even_odd(pulse.alpha, sol.delta_theta);
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace cqp
