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

#ifndef CQP_FIDELITY_HPP
#define CQP_FIDELITY_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "cqp/device.hpp"
#include "cqp/eraser.hpp"
#include "cqp/units.hpp"

namespace cqp {

/// Gaussian coherent probe: amplitude alpha (|alpha|^2 photons in the whole
/// pulse), centre w_p and spectral width W (rad/s). Duration T = 1/W.
struct ProbePulse {
  std::complex<double> alpha;
  AngularFrequency w_p;
  double bandwidth;

  ProbePulse(std::complex<double> alpha, AngularFrequency w_p, double bandwidth);
  static ProbePulse from_duration(double alpha_sq, AngularFrequency w_p, double seconds);

  double photons() const noexcept { return std::norm(alpha); }
  double duration() const noexcept { return 1.0 / bandwidth; }
};

/// Discrete set of harmonic modes the pulse is expanded on, with
/// C_i = sqrt(dw) exp(-(w_i - w_p)^2 / 4W^2) / (2 pi W^2)^(1/4).
struct ModeGrid {
  std::vector<double> frequencies;  // rad/s, uniform
  double spacing = 0.0;             // rad/s
  std::vector<double> weights;

  /// Sum of C_i^2 by pairwise summation.
  double norm_sq() const;
};

inline constexpr double kDefaultSpanSigmas = 8.0;
inline constexpr std::size_t kDefaultGridPoints = 4001;

/// Uniform grid over w_p +/- span_sigmas * W. Requires span_sigmas >= 6 and an
/// odd point count >= 201 so that one node sits on w_p.
ModeGrid build_mode_grid(AngularFrequency w_p, double bandwidth,
                         double span_sigmas = kDefaultSpanSigmas,
                         std::size_t points = kDefaultGridPoints);

using PhaseFunction = std::function<double(double)>;  // rad/s -> rad

/// |<beta_s|beta_s'>| = exp(-sum |alpha C_i|^2 (1 - cos(theta_s - theta_s'))).
/// Phase functions are evaluated at every node (concurrently) and the
/// exponent is accumulated pairwise, so the result is bit-stable.
double fidelity_numeric(const PhaseFunction& theta_s, const PhaseFunction& theta_s2,
                        const ProbePulse& pulse, const ModeGrid& grid);

/// Exact value plus the leading small-parameter expansion when it applies.
struct ClosedForm {
  double value;
  std::optional<double> expansion;
};

/// exp(-|alpha|^2 (1 - exp(-b^2 W^2 / 2))) for a phase difference b (w - w_p).
/// Expansion 1 - |alpha|^2 b^2 W^2 / 2 when |alpha| b W < 0.1.
ClosedForm fidelity_linear_closed(std::complex<double> alpha, double b, double bandwidth);

/// exp(-|alpha|^2 (1 - cos delta_theta)).
double fidelity_even_odd(std::complex<double> alpha, double delta_theta);

/// |exp(-|alpha|^2 (1 - 1/sqrt(1 + 2 i b2 W^2)))| for a phase difference
/// b2 (w - w_p)^2. Expansion 1 - 3 |alpha|^2 b2^2 W^4 / 2 when
/// |alpha| b2 W^2 < 0.1.
ClosedForm fidelity_quadratic_closed(std::complex<double> alpha, double b2, double bandwidth);

/// The same quantity through the real radical
/// exp(-|alpha|^2 (1 - sqrt((1 + sqrt(1 + 4u^2)) / (2 + 8u^2)))), u = b2 W^2.
double fidelity_quadratic_radical(std::complex<double> alpha, double b2, double bandwidth);

enum class FidelityBranch { kSameParityLinear, kSameParityQuadratic, kEvenOdd };

std::string_view to_string(FidelityBranch branch) noexcept;

struct FidelityReport {
  QubitState a;
  QubitState b;
  double f_numeric;
  std::optional<double> f_closed;
  FidelityBranch branch;
};

struct QualityOptions {
  double span_sigmas = kDefaultSpanSigmas;
  std::size_t points = kDefaultGridPoints;
  DeviceSweepOptions sweep{};
};

/// Overlaps for every pair of Hamming weights (a <= b), using the device's own
/// phase curves. Same-parity pairs carry the linear closed form with their b;
/// cross-parity pairs carry the even/odd closed form at the solution contrast.
std::vector<FidelityReport> eraser_quality(const ParityDevice& dev, const EraserSolution& sol,
                                           const ProbePulse& pulse,
                                           const QualityOptions& options = {});

}  // namespace cqp

#endif  // CQP_FIDELITY_HPP
