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

#ifndef CQP_ERASER_HPP
#define CQP_ERASER_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cqp/device.hpp"
#include "cqp/units.hpp"

namespace cqp {

/// theta_i(w_p) - theta_{i+2}(w_p) - 2 pi for every weight pair (i, i+2),
/// pairs starting at an even weight first, then odd. n - 1 entries (none for
/// n = 1).
std::vector<double> eraser_residuals(const DeviceResponse& response, AngularFrequency w_p);
std::vector<double> eraser_residuals(const ParityDevice& dev, AngularFrequency w_p);

/// Same-parity weight pairs in residual order: (0,2), (2,4), ..., (1,3), ...
std::vector<std::pair<std::size_t, std::size_t>> residual_pairs(std::size_t n_qubits);

enum class FreeParameters { kChi, kChiAndModes };

struct SolveOptions {
  FreeParameters free = FreeParameters::kChi;
  /// Probe-frequency search interval; defaults to the analysis band.
  std::optional<Band> search_band;
  double chi_lo = to_angular(0.1e6);
  double chi_hi = to_angular(50e6);
  /// Grid nodes per axis of the coarse (w_p, chi) scan.
  std::size_t grid_points = 65;
  double tol = 1e-9;  // rad, bound on every residual
  std::size_t max_candidates = 8;
  std::size_t max_iterations = 200;
  /// Symmetric spacings tried by the outer loop when modes are free (rad/s).
  double spacing_lo = to_angular(2e6);
  double spacing_hi = to_angular(100e6);
  std::size_t spacing_points = 9;
  DeviceSweepOptions sweep{};
};

struct EraserSolution {
  AngularFrequency w_p{1.0};
  double chi = 0.0;  // rad/s
  std::vector<AngularFrequency> mode_frequencies;
  std::vector<double> theta_by_weight;  // rad, common anchor
  std::vector<double> residuals;        // rad
  double delta_theta = 0.0;             // rad, in (-pi, pi]
  double dispersion_b = 0.0;            // s, worst same-parity first-derivative mismatch
  double dispersion_b2 = 0.0;           // s^2, same for second derivatives
  /// |sin(delta_theta / 2)| below kLowContrast: parities barely distinguishable.
  bool low_contrast = false;
  /// Distinct roots the refinement converged to, before the contrast tie-break.
  std::size_t roots_found = 0;

  double max_residual() const;
};

inline constexpr double kLowContrast = 0.1;

/// Throws NoSolution unless the device has at least ceil((n+1)/2) modes: the
/// phase has to sweep n*pi across the band and each mode contributes 2*pi.
void check_feasibility(const ParityDevice& dev);

/// Finds a probe frequency and common chi (and optionally mode frequencies)
/// that zero every eraser residual.
///
/// A coarse scan over (w_p, log chi) localizes basins; each local minimum is
/// polished by damped Gauss-Newton (Levenberg-Marquardt). Among verified roots
/// the one with the largest |sin(delta_theta/2)| wins. With free modes, equal
/// spacings are scanned first and the best candidates are then refined with
/// every spacing free.
///
/// Throws NoSolution (with the best candidate when one exists) or
/// PoleCollision when the probe lands within 10*tol of a reflection pole.
EraserSolution solve_eraser(const ParityDevice& dev_template, const SolveOptions& options = {});

/// Fills phases, residuals, contrast and dispersion for a known point.
EraserSolution evaluate_solution(const ParityDevice& dev, AngularFrequency w_p,
                                 const DeviceSweepOptions& sweep = {});

/// wrap(theta_even - theta_odd). Throws EraserDegenerate when it is zero.
double contrast(const EraserSolution& sol);

struct DispersionEntry {
  std::size_t weight_a;
  std::size_t weight_b;
  double b;   // s
  double b2;  // s^2, difference of second derivatives
};

struct DispersionReport {
  std::vector<DispersionEntry> even;
  std::vector<DispersionEntry> odd;

  double max_abs_b() const;
  double max_abs_b2() const;
};

/// Derivative mismatches between every pair of distinct same-parity weights.
DispersionReport dispersion_report(const ParityDevice& dev, const EraserSolution& sol);

/// The device the solution describes: template with solved chi and modes.
ParityDevice solved_device(const ParityDevice& dev_template, const EraserSolution& sol);

}  // namespace cqp

#endif  // CQP_ERASER_HPP
