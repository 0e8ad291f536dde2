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

#include "cqp/device.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "cqp/errors.hpp"
#include "cqp/parallel.hpp"

namespace cqp {

QubitState::QubitState(std::size_t n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 8], got " + std::to_string(n));
  }
  if ((bits >> n) != 0) throw std::invalid_argument("qubit state has bits beyond its length");
}

QubitState QubitState::from_string(std::string_view s) {
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '1') {
      bits |= 1u << j;
    } else if (s[j] != '0') {
      throw std::invalid_argument("qubit state string must contain only 0 and 1");
    }
  }
  return QubitState(s.size(), bits);
}

QubitState QubitState::with_weight(std::size_t n, std::size_t weight) {
  if (weight > n) throw std::invalid_argument("weight exceeds qubit count");
  return QubitState(n, weight == 0 ? 0u : (1u << weight) - 1u);
}

std::vector<QubitState> QubitState::all(std::size_t n) {
  std::vector<QubitState> out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) out.emplace_back(n, b);
  return out;
}

int QubitState::bit(std::size_t j) const {
  if (j >= n_) throw std::out_of_range("qubit index out of range");
  return static_cast<int>((bits_ >> j) & 1u);
}

std::size_t QubitState::weight() const noexcept { return std::popcount(bits_); }

std::string QubitState::to_string() const {
  std::string s(n_, '0');
  for (std::size_t j = 0; j < n_; ++j) {
    if ((bits_ >> j) & 1u) s[j] = '1';
  }
  return s;
}

DispersiveCoupling DispersiveCoupling::from_coupling(double g, double detuning) {
  if (!(std::isfinite(g) && std::isfinite(detuning)) || detuning == 0.0) {
    throw std::invalid_argument("coupling and detuning must be finite, detuning non-zero");
  }
  return {g * g / detuning, g, detuning};
}

std::size_t required_modes(std::size_t n_qubits) noexcept { return n_qubits / 2 + 1; }

namespace {

void validate_coupling(const DispersiveCoupling& c) {
  if (!std::isfinite(c.chi) || c.chi <= 0.0) {
    throw std::invalid_argument("dispersive shift chi must be finite and positive");
  }
  if (c.g && c.detuning) {
    const double expect = (*c.g) * (*c.g) / (*c.detuning);
    if (std::abs(expect - c.chi) > 1e-12 * std::abs(c.chi)) {
      throw std::invalid_argument("chi does not equal g^2/Delta");
    }
  }
}

}  // namespace

double loaded_estimate(const Mode& m, double z0) {
  const double cr = lumped_equivalent(m.frequency, z0).capacitance;
  return m.frequency.rad_per_s() / std::sqrt(1.0 + m.coupling_capacitance / cr);
}

ParityDevice::ParityDevice(std::size_t n_qubits, std::vector<Mode> modes,
                           std::vector<std::vector<DispersiveCoupling>> chi_matrix, double z0,
                           ResonatorModel model, std::optional<Band> band)
    : n_(n_qubits),
      modes_(std::move(modes)),
      chi_(std::move(chi_matrix)),
      equal_chi_(true),
      z0_(z0),
      model_(model),
      band_(band) {
  if (n_ < 1 || n_ > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 8], got " + std::to_string(n_));
  }
  if (modes_.empty()) throw std::invalid_argument("device needs at least one mode");
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    const double c = modes_[k].coupling_capacitance;
    if (!std::isfinite(c) || c <= 0.0) {
      throw std::invalid_argument("coupling capacitance must be finite and positive");
    }
    if (k > 0 && !(modes_[k - 1].frequency < modes_[k].frequency)) {
      throw std::invalid_argument("mode frequencies must be strictly increasing");
    }
  }
  if (!std::isfinite(z0_) || z0_ <= 0.0) throw std::invalid_argument("Z0 must be positive");
  if (chi_.size() != n_) throw std::invalid_argument("chi matrix must have one row per qubit");
  for (const auto& row : chi_) {
    if (row.size() != modes_.size()) {
      throw std::invalid_argument("chi matrix must have one column per mode");
    }
    for (const auto& c : row) {
      validate_coupling(c);
      equal_chi_ = equal_chi_ && c.chi == chi_[0][0].chi;
    }
  }
  if (band_ && !(band_->lo < band_->hi)) throw std::invalid_argument("band needs lo < hi");
}

ParityDevice ParityDevice::equal_coupling(std::size_t n_qubits, std::vector<Mode> modes,
                                          double chi, double z0, ResonatorModel model,
                                          std::optional<Band> band) {
  std::vector<std::vector<DispersiveCoupling>> m(
      n_qubits, std::vector<DispersiveCoupling>(modes.size(), DispersiveCoupling{chi, {}, {}}));
  return ParityDevice(n_qubits, std::move(modes), std::move(m), z0, model, band);
}

double ParityDevice::common_chi() const {
  if (!equal_chi_) throw std::logic_error("device does not have equal chi");
  return chi_[0][0].chi;
}

Band ParityDevice::band() const { return band_ ? *band_ : default_band(); }

Band ParityDevice::default_band() const {
  double max_chi = 0.0;
  for (const auto& row : chi_) {
    for (const auto& c : row) max_chi = std::max(max_chi, c.chi);
  }
  const double margin = 20.0 * max_chi * static_cast<double>(n_);
  double lo = modes_.front().frequency.rad_per_s();
  for (const auto& m : modes_) lo = std::min(lo, loaded_estimate(m, z0_));
  lo -= margin;
  const double hi = modes_.back().frequency.rad_per_s() + margin;
  if (lo <= 0.0) throw NonPositiveResult("default band reaches zero frequency");
  return {AngularFrequency(lo), AngularFrequency(hi)};
}

std::vector<double> ParityDevice::mode_chis(std::size_t mode) const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = chi_[j].at(mode).chi;
  return out;
}

ParityDevice ParityDevice::with_chi(double chi) const {
  return equal_coupling(n_, modes_, chi, z0_, model_, band_);
}

ParityDevice ParityDevice::with_mode_frequencies(std::span<const AngularFrequency> freqs) const {
  if (freqs.size() != modes_.size()) throw std::invalid_argument("one frequency per mode");
  auto modes = modes_;
  for (std::size_t k = 0; k < modes.size(); ++k) modes[k].frequency = freqs[k];
  return ParityDevice(n_, std::move(modes), chi_, z0_, model_, band_);
}

ParityDevice ParityDevice::with_band(Band band) const {
  return ParityDevice(n_, modes_, chi_, z0_, model_, band);
}

ParityDevice ParityDevice::with_model(ResonatorModel model) const {
  return ParityDevice(n_, modes_, chi_, z0_, model, band_);
}

AngularFrequency shifted_frequency(AngularFrequency mode, std::span<const double> chis,
                                   const QubitState& state) {
  if (chis.size() != state.size()) {
    throw std::invalid_argument("need one chi per qubit");
  }
  // Raising and lowering pulls are summed separately in sorted order, so the
  // result depends only on the multiset of pulls, never on qubit labels.
  std::vector<double> up, down;
  for (std::size_t j = 0; j < chis.size(); ++j) (state.bit(j) ? down : up).push_back(chis[j]);
  std::sort(up.begin(), up.end());
  std::sort(down.begin(), down.end());
  double sum_up = 0.0, sum_down = 0.0;
  for (double c : up) sum_up += c;
  for (double c : down) sum_down += c;
  const double w = mode.rad_per_s() + (sum_up - sum_down);
  if (!(w > 0.0)) throw NonPositiveResult("dispersive shifts drive the mode to w <= 0");
  return AngularFrequency(w);
}

NetworkElement resonator_branch(const Mode& mode, AngularFrequency resonance, double z0,
                                ResonatorModel model) {
  NetworkElement res = model == ResonatorModel::kStub ? stub(z0, resonance)
                                                      : lumped_resonator(resonance, z0);
  return series({capacitor(mode.coupling_capacitance), std::move(res)});
}

NetworkElement build_state_network(const ParityDevice& dev, const QubitState& state) {
  if (state.size() != dev.n_qubits()) throw std::invalid_argument("state length != qubit count");
  std::vector<NetworkElement> branches;
  branches.reserve(dev.n_modes());
  for (std::size_t k = 0; k < dev.n_modes(); ++k) {
    const auto chis = dev.mode_chis(k);
    const Mode& m = dev.modes()[k];
    branches.push_back(
        resonator_branch(m, shifted_frequency(m.frequency, chis, state), dev.z0(), dev.model()));
  }
  if (branches.size() == 1) return std::move(branches.front());
  return parallel(std::move(branches));
}

DeviceResponse::DeviceResponse(const ParityDevice& dev, DeviceSweepOptions options)
    : dev_(dev), band_(dev.band()), anchor_(0.0) {
  const std::size_t n = dev_.n_qubits();
  std::vector<QubitState> reps;
  if (dev_.equal_chi()) {
    for (std::size_t w = 0; w <= n; ++w) reps.push_back(QubitState::with_weight(n, w));
  } else {
    reps = QubitState::all(n);
  }

  anchor_ = reflection_phase(build_state_network(dev_, QubitState(n, 0)), band_.lo, dev_.z0());

  SweepOptions sweep;
  sweep.base_points = std::max<std::size_t>(64, options.base_points);
  sweep.z0 = dev_.z0();
  std::vector<std::optional<PhaseCurve>> built(reps.size());
  parallel_for(reps.size(), [&](std::size_t i) {
    built[i].emplace(build_state_network(dev_, reps[i]), band_.lo, band_.hi, sweep, anchor_);
  });
  curves_.reserve(built.size());
  for (auto& c : built) curves_.push_back(std::move(*c));
}

std::size_t DeviceResponse::curve_index(const QubitState& state) const {
  if (state.size() != dev_.n_qubits()) throw std::invalid_argument("state length != qubit count");
  return dev_.equal_chi() ? state.weight() : state.bits();
}

const PhaseCurve& DeviceResponse::curve(const QubitState& state) const {
  return curves_[curve_index(state)];
}

const PhaseCurve& DeviceResponse::curve_for_weight(std::size_t weight) const {
  return curve(QubitState::with_weight(dev_.n_qubits(), weight));
}

double DeviceResponse::phase(const QubitState& state, AngularFrequency w) const {
  return curve(state)(w);
}

double DeviceResponse::phase_by_weight(std::size_t weight, AngularFrequency w) const {
  return curve_for_weight(weight)(w);
}

double phase_for_state(const ParityDevice& dev, const QubitState& state, AngularFrequency w) {
  return DeviceResponse(dev).phase(state, w);
}

double phase_derivative(const NetworkElement& net, double z0, AngularFrequency w, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
  const double w0 = w.rad_per_s();
  // The second difference divides by h^2, so it needs a wider stencil to keep
  // rounding below the truncation error.
  const double h = std::max(w0 * (order == 1 ? 1e-7 : 1e-5), to_angular(1e3));
  const double p0 = reflection_phase(net, w, z0);
  auto rel = [&](double dw) {
    const double d = wrap_phase(reflection_phase(net, AngularFrequency(w0 + dw), z0) - p0);
    if (std::abs(d) > 0.25 * kPi) {
      throw PoleProximity("derivative stencil spans a resonance narrower than the step");
    }
    return d;
  };
  auto estimate = [&](double step) {
    const double fp = rel(step);
    const double fm = rel(-step);
    return order == 1 ? (fp - fm) / (2.0 * step) : (fp + fm) / (step * step);
  };
  const double coarse = estimate(h);
  const double fine = estimate(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

double phase_derivatives(const ParityDevice& dev, const QubitState& state, AngularFrequency w,
                         int order) {
  return phase_derivative(build_state_network(dev, state), dev.z0(), w, order);
}

ResonanceDiagnostics resonance_diagnostics(const DeviceResponse& response,
                                           const QubitState& state) {
  const ParityDevice& dev = response.device();
  ResonanceDiagnostics out;
  for (std::size_t k = 0; k < dev.n_modes(); ++k) {
    const auto chis = dev.mode_chis(k);
    out.bare.push_back(shifted_frequency(dev.modes()[k].frequency, chis, state).rad_per_s());
  }
  out.loaded = response.curve(state).profile().poles;
  return out;
}

}  // namespace cqp
