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

#include "cqp/phase_profile.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "cqp/errors.hpp"
#include "cqp/parallel.hpp"

namespace cqp {
namespace {

// Allowed step against the Foster direction before an interval is considered
// aliased. Covers rounding in atan2 only.
constexpr double kFosterSlack = 1e-9;

struct Sample {
  double w;
  double phase;
  Reactance x;
};

Sample evaluate(const NetworkElement& net, double w, double z0) {
  const Reactance x = network_reactance(net, AngularFrequency(w));
  return {w, reflection_phase(x, z0), x};
}

bool needs_split(double step, double max_step) {
  return std::abs(step) >= max_step || step > kFosterSlack;
}

// Appends the refined samples of (left, right], left-to-right.
void refine_interval(const NetworkElement& net, const Sample& left_end, const Sample& right_end,
                     const SweepOptions& opt, std::atomic<std::size_t>& budget,
                     std::vector<Sample>& out) {
  std::vector<Sample> pending{right_end};
  Sample left = left_end;
  while (!pending.empty()) {
    const Sample right = pending.back();
    const double step = wrap_phase(right.phase - left.phase);
    if (needs_split(step, opt.max_step)) {
      const double mid = 0.5 * (left.w + right.w);
      if (!(mid > left.w && mid < right.w)) {
        throw RefinementLimit("phase step of " + std::to_string(step) +
                              " rad cannot be resolved at w = " + std::to_string(left.w));
      }
      if (budget.fetch_add(1) + 1 > opt.max_points) {
        throw RefinementLimit("adaptive refinement exceeded " + std::to_string(opt.max_points) +
                              " points");
      }
      pending.push_back(evaluate(net, mid, opt.z0));
      continue;
    }
    out.push_back(right);
    left = right;
    pending.pop_back();
  }
}

// Uniform grid plus one node between every pair of adjacent critical points.
// No interval then holds more than one pole or zero, so its phase change is
// below 2 pi and a wrapped step can never hide a whole revolution.
std::vector<double> base_grid(double a, double b, std::size_t n, const FosterPoints& fp) {
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = (i + 1 == n) ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  std::vector<double> crit = fp.poles;
  crit.insert(crit.end(), fp.zeros.begin(), fp.zeros.end());
  crit.push_back(a);
  crit.push_back(b);
  std::sort(crit.begin(), crit.end());
  for (std::size_t i = 0; i + 1 < crit.size(); ++i) grid.push_back(0.5 * (crit[i] + crit[i + 1]));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

double PhaseProfile::total_phase_change() const {
  if (theta.empty()) return 0.0;
  return theta.back() - theta.front();
}

double PhaseProfile::winding() const {
  if (theta.empty()) return 0.0;
  const double crossed =
      std::floor(theta.front() / kTwoPi) - std::floor(theta.back() / kTwoPi);
  return -kTwoPi * crossed;
}

void PhaseProfile::shift_branch(long k) {
  const double offset = kTwoPi * static_cast<double>(k);
  for (double& t : theta) t += offset;
}

PhaseProfile phase_sweep(const NetworkElement& net, AngularFrequency lo, AngularFrequency hi,
                         const SweepOptions& opt) {
  if (!(lo < hi)) throw std::invalid_argument("phase_sweep requires lo < hi");
  if (opt.base_points < 64) throw std::invalid_argument("phase_sweep requires base_points >= 64");
  if (opt.max_points < opt.base_points) {
    throw RefinementLimit("max_points is smaller than the base grid");
  }

  const FosterPoints fp = foster_points(net, lo, hi);
  const std::vector<double> nodes = base_grid(lo.rad_per_s(), hi.rad_per_s(), opt.base_points, fp);
  const std::size_t n = nodes.size();
  std::vector<Sample> base(n);
  parallel_for(n, [&](std::size_t i) { base[i] = evaluate(net, nodes[i], opt.z0); });

  std::atomic<std::size_t> budget{n};
  std::vector<std::vector<Sample>> pieces(n - 1);
  parallel_for(n - 1, [&](std::size_t i) {
    refine_interval(net, base[i], base[i + 1], opt, budget, pieces[i]);
  });

  std::vector<Sample> samples;
  samples.reserve(budget.load());
  samples.push_back(base.front());
  for (auto& p : pieces) samples.insert(samples.end(), p.begin(), p.end());

  PhaseProfile prof;
  prof.poles = fp.poles;
  prof.grid.reserve(samples.size());
  prof.theta.reserve(samples.size());
  prof.grid.push_back(samples.front().w);
  prof.theta.push_back(samples.front().phase);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    prof.grid.push_back(samples[i].w);
    prof.theta.push_back(prof.theta.back() + wrap_phase(samples[i].phase - samples[i - 1].phase));
  }
  return prof;
}

PhaseProfile phase_sweep(const NetworkElement& net, AngularFrequency lo, AngularFrequency hi,
                         std::size_t base_points, double z0) {
  SweepOptions opt;
  opt.base_points = base_points;
  opt.z0 = z0;
  return phase_sweep(net, lo, hi, opt);
}

PhaseCurve::PhaseCurve(NetworkElement net, AngularFrequency lo, AngularFrequency hi,
                       const SweepOptions& options, std::optional<double> anchor_reference)
    : net_(std::move(net)), z0_(options.z0), profile_(phase_sweep(net_, lo, hi, options)) {
  if (anchor_reference) {
    profile_.shift_branch(std::lround((*anchor_reference - profile_.theta.front()) / kTwoPi));
  }
}

double PhaseCurve::operator()(AngularFrequency w) const { return (*this)(w.rad_per_s()); }

double PhaseCurve::operator()(double w) const {
  const auto& grid = profile_.grid;
  if (!(w >= grid.front() && w <= grid.back())) {
    throw std::out_of_range("frequency " + std::to_string(w) + " rad/s outside the swept window");
  }
  auto it = std::upper_bound(grid.begin(), grid.end(), w);
  std::size_t i = (it == grid.begin()) ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
  i = std::min(i, grid.size() - 2);
  const double principal = reflection_phase(net_, AngularFrequency(w), z0_);
  const double k = std::round((profile_.theta[i] - principal) / kTwoPi);
  return principal + kTwoPi * k;
}

}  // namespace cqp
