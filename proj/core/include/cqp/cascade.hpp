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

#ifndef CQP_CASCADE_HPP
#define CQP_CASCADE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cqp/device.hpp"
#include "cqp/eraser.hpp"
#include "cqp/fidelity.hpp"
#include "cqp/phase_profile.hpp"

namespace cqp {

/// One cavity of the sequential scheme, pulled by +/- chi by its own qubit.
struct Cavity {
  AngularFrequency frequency;
  double chi;                   // rad/s
  double coupling_capacitance;  // F
};

/// n cavities, one per qubit, probed one after another through ideal
/// circulators. The reflected phase is the sum of the single-cavity phases.
class CascadeDevice {
 public:
  CascadeDevice(std::vector<Cavity> cavities, double z0 = 50.0,
                ResonatorModel model = ResonatorModel::kLumped,
                std::optional<Band> band = std::nullopt);

  /// n identical cavities.
  static CascadeDevice uniform(std::size_t n_qubits, Cavity cavity, double z0 = 50.0,
                               ResonatorModel model = ResonatorModel::kLumped,
                               std::optional<Band> band = std::nullopt);

  std::size_t n_qubits() const noexcept { return cavities_.size(); }
  const std::vector<Cavity>& cavities() const noexcept { return cavities_; }
  double z0() const noexcept { return z0_; }
  ResonatorModel model() const noexcept { return model_; }
  Band band() const;

  CascadeDevice with_chi(double chi) const;
  CascadeDevice with_coupling(double farads) const;
  CascadeDevice permuted(std::span<const std::size_t> order) const;

 private:
  std::vector<Cavity> cavities_;
  double z0_;
  ResonatorModel model_;
  std::optional<Band> band_;
};

/// Reflection network of cavity j with its qubit in `bit`.
NetworkElement cavity_network(const CascadeDevice& dev, std::size_t cavity, int bit);

/// Unwrapped single-cavity phases for both qubit values, all on the branch of
/// cavity 0 / bit 0 at the band's lower edge.
class CascadeResponse {
 public:
  explicit CascadeResponse(const CascadeDevice& dev, DeviceSweepOptions options = {});

  const CascadeDevice& device() const noexcept { return dev_; }
  double single(std::size_t cavity, int bit, double w) const;
  double phase(const QubitState& state, double w) const;
  double phase_by_weight(std::size_t weight, double w) const;

 private:
  CascadeDevice dev_;
  std::vector<std::array<PhaseCurve, 2>> curves_;
};

/// sum_j theta_single(w; w_r + (-1)^{s_j} chi).
double cascade_phase(const CascadeDevice& dev, const QubitState& state, AngularFrequency w);

/// Sum of single-cavity phase derivatives (order 1 or 2).
double cascade_derivative(const CascadeDevice& dev, const QubitState& state, AngularFrequency w,
                          int order);

enum class CascadeKnob { kChi, kCoupling };

struct CascadeTuning {
  CascadeDevice device;
  AngularFrequency w_p;
  double step;      // theta_0 - theta_1 of one cavity at w_p, rad (pi when tuned)
  double b_single;  // theta_0' - theta_1' of one cavity at w_p, s
};

/// Tunes a uniform cascade so that one cavity's phase step between its qubit
/// states is pi at a probe frequency where the first derivatives of both
/// states agree. The inner bisection places w_p between the two series
/// resonances where b_single = 0; the outer one adjusts chi (kChi) or the
/// coupling capacitance (kCoupling) until the step is pi.
CascadeTuning tune_cascade(const CascadeDevice& dev_template, CascadeKnob knob);

struct SchemeSummary {
  std::string name;
  std::size_t resonators = 0;
  AngularFrequency w_p{1.0};
  double chi = 0.0;
  std::vector<double> residuals;
  double delta_theta = 0.0;
  double b = 0.0;   // worst same-parity first-derivative mismatch, s
  double b2 = 0.0;  // worst same-parity second-derivative mismatch, s^2
  double same_parity_min_f = 1.0;
  double cross_parity_max_f = 0.0;
  std::vector<FidelityReport> reports;
};

struct SchemeComparison {
  SchemeSummary parallel;
  SchemeSummary cascade;
  CascadeTuning tuning;
  /// Largest |F_numeric - F_quadratic_closed| over the cascade's same-parity
  /// pairs, with b2 = b'/2 for the quadratic form.
  double quadratic_closed_error = 0.0;
};

/// Evaluates both schemes with the same pulse amplitude and bandwidth, each at
/// its own probe frequency. With kCoupling the cascade keeps the parallel
/// solution's chi (matched chi) and tunes its coupling capacitors instead.
SchemeComparison compare_schemes(const ParityDevice& parallel_dev, const EraserSolution& sol,
                                 const CascadeDevice& cascade_template, const ProbePulse& pulse,
                                 CascadeKnob knob = CascadeKnob::kCoupling,
                                 const QualityOptions& options = {});

}  // namespace cqp

#endif  // CQP_CASCADE_HPP
