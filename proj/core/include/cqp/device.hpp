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

#ifndef CQP_DEVICE_HPP
#define CQP_DEVICE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqp/network.hpp"
#include "cqp/phase_profile.hpp"
#include "cqp/units.hpp"

namespace cqp {

inline constexpr std::size_t kMaxQubits = 8;

/// Computational-basis state of n qubits. Qubit j is character j of the
/// string form, so "011" has qubit 0 in |0> and qubits 1, 2 in |1>.
class QubitState {
 public:
  QubitState(std::size_t n, std::uint32_t bits);

  static QubitState from_string(std::string_view bits);
  /// Representative of a Hamming weight: the first `weight` qubits set.
  static QubitState with_weight(std::size_t n, std::size_t weight);
  static std::vector<QubitState> all(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  int bit(std::size_t j) const;
  std::size_t weight() const noexcept;
  bool odd() const noexcept { return weight() % 2 == 1; }
  std::uint32_t bits() const noexcept { return bits_; }
  std::string to_string() const;

  friend bool operator==(const QubitState&, const QubitState&) = default;

 private:
  std::size_t n_;
  std::uint32_t bits_;
};

/// Dispersive pull chi (rad/s). When built from a qubit-mode coupling g and
/// detuning Delta it keeps both, with chi = g^2/Delta.
struct DispersiveCoupling {
  double chi;
  std::optional<double> g;
  std::optional<double> detuning;

  static DispersiveCoupling from_coupling(double g, double detuning);
};

struct Mode {
  AngularFrequency frequency;
  double coupling_capacitance;  // F
};

enum class ResonatorModel { kLumped, kStub };

struct Band {
  AngularFrequency lo;
  AngularFrequency hi;
};

/// Series resonance of a mode pulled down by its coupling capacitor, from the
/// lumped picture: w / sqrt(1 + C_couple / C_r).
double loaded_estimate(const Mode& mode, double z0);

/// Minimum number of resonant modes for n-qubit parity: ceil((n+1)/2).
std::size_t required_modes(std::size_t n_qubits) noexcept;

/// n qubits dispersively coupled to m modes that all hang off one reflection
/// port (each mode through its own coupling capacitor).
class ParityDevice {
 public:
  ParityDevice(std::size_t n_qubits, std::vector<Mode> modes,
               std::vector<std::vector<DispersiveCoupling>> chi_matrix, double z0 = 50.0,
               ResonatorModel model = ResonatorModel::kLumped,
               std::optional<Band> band = std::nullopt);

  /// Every qubit pulls every mode by the same chi.
  static ParityDevice equal_coupling(std::size_t n_qubits, std::vector<Mode> modes, double chi,
                                     double z0 = 50.0,
                                     ResonatorModel model = ResonatorModel::kLumped,
                                     std::optional<Band> band = std::nullopt);

  std::size_t n_qubits() const noexcept { return n_; }
  std::size_t n_modes() const noexcept { return modes_.size(); }
  const std::vector<Mode>& modes() const noexcept { return modes_; }
  double chi(std::size_t qubit, std::size_t mode) const { return chi_.at(qubit).at(mode).chi; }
  const std::vector<std::vector<DispersiveCoupling>>& chi_matrix() const noexcept { return chi_; }
  bool equal_chi() const noexcept { return equal_chi_; }
  /// The shared chi; throws std::logic_error unless equal_chi().
  double common_chi() const;
  double z0() const noexcept { return z0_; }
  ResonatorModel model() const noexcept { return model_; }
  /// Explicit band if one was given, otherwise default_band().
  Band band() const;
  bool has_explicit_band() const noexcept { return band_.has_value(); }
  /// [lowest loaded mode - 20 chi n, highest mode + 20 chi n], where the loaded
  /// estimate accounts for the coupling capacitor pulling the series
  /// resonance below the bare mode.
  Band default_band() const;

  /// Chi of every qubit on one mode.
  std::vector<double> mode_chis(std::size_t mode) const;

  ParityDevice with_chi(double chi) const;
  ParityDevice with_mode_frequencies(std::span<const AngularFrequency> freqs) const;
  ParityDevice with_band(Band band) const;
  ParityDevice with_model(ResonatorModel model) const;

 private:
  std::size_t n_;
  std::vector<Mode> modes_;
  std::vector<std::vector<DispersiveCoupling>> chi_;
  bool equal_chi_;
  double z0_;
  ResonatorModel model_;
  std::optional<Band> band_;
};

/// mode + sum_j (-1)^{s_j} chi_j. Throws NonPositiveResult if the result is <= 0.
AngularFrequency shifted_frequency(AngularFrequency mode, std::span<const double> chis,
                                   const QubitState& state);

/// Parallel over modes of Series{coupling capacitor, resonator at the
/// state-shifted frequency}. A single-mode device yields the bare Series branch.
NetworkElement build_state_network(const ParityDevice& dev, const QubitState& state);

/// Network of one coupling-capacitor branch with its resonator at `resonance`.
NetworkElement resonator_branch(const Mode& mode, AngularFrequency resonance, double z0,
                                ResonatorModel model);

struct DeviceSweepOptions {
  std::size_t base_points = 2048;
};

/// Reflection phases of every qubit state of a device over its band.
///
/// All curves are unwrapped from the band's lower edge and put on the 2*pi
/// branch nearest the all-zeros state there, so phases of different states can
/// be subtracted directly. Under equal chi the states of one Hamming weight
/// share a single curve.
class DeviceResponse {
 public:
  explicit DeviceResponse(const ParityDevice& dev, DeviceSweepOptions options = {});

  const ParityDevice& device() const noexcept { return dev_; }
  Band band() const noexcept { return band_; }
  double anchor() const noexcept { return anchor_; }

  double phase(const QubitState& state, AngularFrequency w) const;
  /// Phase of the representative state of a weight (identical to any state of
  /// that weight when chi is equal).
  double phase_by_weight(std::size_t weight, AngularFrequency w) const;

  const PhaseCurve& curve(const QubitState& state) const;
  const PhaseCurve& curve_for_weight(std::size_t weight) const;

 private:
  std::size_t curve_index(const QubitState& state) const;

  ParityDevice dev_;
  Band band_;
  double anchor_;
  std::vector<PhaseCurve> curves_;
};

/// Unwrapped phase of one state on the device's common anchor.
double phase_for_state(const ParityDevice& dev, const QubitState& state, AngularFrequency w);

/// d(theta)/d(omega) (order 1, s) or d2(theta)/d(omega)2 (order 2, s^2) of a
/// network's reflection phase by central differences with
/// h = max(1e-7 w, 2 pi * 1 kHz) (1e-5 w for order 2) and one Richardson step.
/// Throws PoleProximity if the stencil moves the phase by more than pi/4.
double phase_derivative(const NetworkElement& net, double z0, AngularFrequency w, int order);

double phase_derivatives(const ParityDevice& dev, const QubitState& state, AngularFrequency w,
                         int order);

/// Bare (state-shifted, uncoupled) and loaded (impedance poles of the whole
/// port) resonance positions for one state, in rad/s.
struct ResonanceDiagnostics {
  std::vector<double> bare;
  std::vector<double> loaded;
};

ResonanceDiagnostics resonance_diagnostics(const DeviceResponse& response,
                                           const QubitState& state);

}  // namespace cqp

#endif  // CQP_DEVICE_HPP
