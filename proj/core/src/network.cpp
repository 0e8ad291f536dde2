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

#include "cqp/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "cqp/errors.hpp"

namespace cqp {
namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::invalid_argument(std::string(what) + " must be finite and positive, got " +
                                std::to_string(v));
  }
}

Reactance normalized(double num, double den) {
  const double norm = std::hypot(num, den);
  if (norm == 0.0 || !std::isfinite(norm)) {
    throw PoleProximity("reactance evaluation degenerated to 0/0");
  }
  return {num / norm, den / norm};
}

// X1 + X2 on the projective line. Two opens in series stay open.
Reactance add_series(const Reactance& a, const Reactance& b) {
  if (a.den == 0.0 && b.den == 0.0) return {1.0, 0.0};
  return normalized(a.num * b.den + b.num * a.den, a.den * b.den);
}

// X1 X2 / (X1 + X2). Two shorts in parallel stay shorted.
Reactance add_parallel(const Reactance& a, const Reactance& b) {
  if (a.num == 0.0 && b.num == 0.0) return {0.0, 1.0};
  return normalized(a.num * b.num, a.num * b.den + b.num * a.den);
}

struct ReactanceVisitor {
  double w;

  Reactance operator()(const QuarterWaveStub& s) const {
    const double phi = 0.5 * kPi * w / s.resonance.rad_per_s();
    return normalized(s.z0 * std::sin(phi), std::cos(phi));
  }
  Reactance operator()(const Capacitor& c) const { return normalized(-1.0, w * c.farads); }
  Reactance operator()(const Inductor& l) const { return normalized(w * l.henries, 1.0); }
  Reactance operator()(const Series& s) const {
    Reactance acc = std::visit(*this, s.children.front().node());
    for (std::size_t i = 1; i < s.children.size(); ++i) {
      acc = add_series(acc, std::visit(*this, s.children[i].node()));
    }
    return acc;
  }
  Reactance operator()(const Parallel& p) const {
    Reactance acc = std::visit(*this, p.children.front().node());
    for (std::size_t i = 1; i < p.children.size(); ++i) {
      acc = add_parallel(acc, std::visit(*this, p.children[i].node()));
    }
    return acc;
  }
};

}  // namespace

NetworkElement::NetworkElement(QuarterWaveStub s) : node_(s) { require_positive(s.z0, "stub Z0"); }
NetworkElement::NetworkElement(Capacitor c) : node_(c) { require_positive(c.farads, "capacitance"); }
NetworkElement::NetworkElement(Inductor l) : node_(l) { require_positive(l.henries, "inductance"); }
NetworkElement::NetworkElement(Series s) : node_(std::move(s)) {
  if (std::get<Series>(node_).children.empty()) throw std::invalid_argument("empty series composite");
}
NetworkElement::NetworkElement(Parallel p) : node_(std::move(p)) {
  if (std::get<Parallel>(node_).children.empty()) {
    throw std::invalid_argument("empty parallel composite");
  }
}

std::size_t NetworkElement::leaf_count() const {
  auto count_children = [](const std::vector<NetworkElement>& children) {
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
  };
  if (const auto* s = std::get_if<Series>(&node_)) return count_children(s->children);
  if (const auto* p = std::get_if<Parallel>(&node_)) return count_children(p->children);
  return 1;
}

NetworkElement stub(double z0, AngularFrequency resonance) {
  return NetworkElement(QuarterWaveStub{z0, resonance});
}
NetworkElement capacitor(double farads) { return NetworkElement(Capacitor{farads}); }
NetworkElement inductor(double henries) { return NetworkElement(Inductor{henries}); }
NetworkElement series(std::vector<NetworkElement> children) {
  return NetworkElement(Series{std::move(children)});
}
NetworkElement parallel(std::vector<NetworkElement> children) {
  return NetworkElement(Parallel{std::move(children)});
}

Reactance network_reactance(const NetworkElement& net, AngularFrequency w) {
  return std::visit(ReactanceVisitor{w.rad_per_s()}, net.node());
}

ComplexImpedance stub_impedance(AngularFrequency w, double z0, AngularFrequency resonance) {
  require_positive(z0, "stub Z0");
  const double phi = 0.5 * kPi * w.rad_per_s() / resonance.rad_per_s();
  const double c = std::cos(phi);
  if (std::abs(c) < 1e-14) {
    throw PoleProximity("stub impedance requested at a tan singularity; use the admittance form");
  }
  return {0.0, z0 * std::sin(phi) / c};
}

LumpedEquivalent lumped_equivalent(AngularFrequency resonance, double z0) {
  require_positive(z0, "Z0");
  const double wr = resonance.rad_per_s();
  const double c = kPi / (4.0 * wr * z0);
  return {c, 1.0 / (wr * wr * c)};
}

NetworkElement lumped_resonator(AngularFrequency resonance, double z0) {
  const auto eq = lumped_equivalent(resonance, z0);
  return parallel({capacitor(eq.capacitance), inductor(eq.inductance)});
}

ComplexImpedance network_impedance(const NetworkElement& net, AngularFrequency w) {
  const Reactance x = network_reactance(net, w);
  // |Y| = |den/num| on the normalised pair.
  if (std::abs(x.den) < 1e-18 * std::abs(x.num)) {
    throw PoleProximity("network impedance requested at a pole (|Y| < 1e-18 S)");
  }
  return {0.0, x.num / x.den};
}

std::complex<double> reflection_coefficient(const NetworkElement& net, AngularFrequency w,
                                            double z0) {
  require_positive(z0, "reference impedance");
  const Reactance x = network_reactance(net, w);
  const std::complex<double> num(-z0 * x.den, x.num);
  const std::complex<double> den(z0 * x.den, x.num);
  return num / den;
}

double reflection_phase(const Reactance& x, double z0) noexcept {
  // r = -conj(u)/u with u = Z0*den + i*num, so arg r = pi - 2 arg u.
  return wrap_phase(kPi - 2.0 * std::atan2(x.num, z0 * x.den));
}

double reflection_phase(const NetworkElement& net, AngularFrequency w, double z0) {
  require_positive(z0, "reference impedance");
  return reflection_phase(network_reactance(net, w), z0);
}

namespace {

double reactance_sign(const NetworkElement& net, double w) {
  const Reactance x = network_reactance(net, AngularFrequency(w));
  return x.num * x.den;
}

// Root of a function that rises from negative to positive on (a, b).
// `reactance` selects the reactance (true) or susceptance (false) sign.
double bisect_rising(const NetworkElement& net, double a, double b, bool reactance) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) break;
    const double s = reactance_sign(net, mid);
    const bool below = reactance ? s < 0.0 : s > 0.0;
    (below ? a : b) = mid;
  }
  return 0.5 * (a + b);
}

std::vector<double> merge_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > 1e-14 * x) out.push_back(x);
  }
  return out;
}

// Roots of a rising Foster function between its known singularities. For a
// series composite `singular` are the poles and the roots are zeros of X;
// for a parallel composite `singular` are zeros of X and the roots are poles
// (zeros of B = -1/X, which also rises).
std::vector<double> interlaced_roots(const NetworkElement& net, const std::vector<double>& singular,
                                     double lo, double hi, bool reactance) {
  const auto negative = [&](double w) {
    const double s = reactance_sign(net, w);
    return reactance ? s < 0.0 : s > 0.0;
  };
  std::vector<double> roots;
  if (singular.empty()) {
    if (negative(lo) && !negative(hi)) roots.push_back(bisect_rising(net, lo, hi, reactance));
    return roots;
  }
  if (negative(lo)) roots.push_back(bisect_rising(net, lo, singular.front(), reactance));
  for (std::size_t i = 0; i + 1 < singular.size(); ++i) {
    roots.push_back(bisect_rising(net, singular[i], singular[i + 1], reactance));
  }
  if (!negative(hi)) roots.push_back(bisect_rising(net, singular.back(), hi, reactance));
  return roots;
}

FosterPoints critical(const NetworkElement& net, double lo, double hi) {
  return std::visit(
      [&](const auto& node) -> FosterPoints {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Capacitor> || std::is_same_v<T, Inductor>) {
          return {};  // only singular at w = 0
        } else if constexpr (std::is_same_v<T, QuarterWaveStub>) {
          // tan(pi/2 w/wr): zeros at even, poles at odd multiples of wr.
          FosterPoints f;
          const double wr = node.resonance.rad_per_s();
          for (double k = std::floor(lo / wr) + 1.0; k * wr < hi; k += 1.0) {
            (static_cast<long long>(k) % 2 == 0 ? f.zeros : f.poles).push_back(k * wr);
          }
          return f;
        } else {
          constexpr bool kSeries = std::is_same_v<T, Series>;
          std::vector<double> inherited;
          for (const auto& child : node.children) {
            FosterPoints c = critical(child, lo, hi);
            auto& keep = kSeries ? c.poles : c.zeros;
            inherited.insert(inherited.end(), keep.begin(), keep.end());
          }
          FosterPoints f;
          auto& same = kSeries ? f.poles : f.zeros;
          auto& other = kSeries ? f.zeros : f.poles;
          same = merge_unique(std::move(inherited));
          other = interlaced_roots(net, same, lo, hi, kSeries);
          return f;
        }
      },
      net.node());
}

}  // namespace

FosterPoints foster_points(const NetworkElement& net, AngularFrequency lo, AngularFrequency hi) {
  if (!(lo < hi)) throw std::invalid_argument("foster_points requires lo < hi");
  return critical(net, lo.rad_per_s(), hi.rad_per_s());
}

}  // namespace cqp
