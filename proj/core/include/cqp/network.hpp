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

#ifndef CQP_NETWORK_HPP
#define CQP_NETWORK_HPP

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "cqp/units.hpp"

namespace cqp {

/// Complex impedance in ohms.
using ComplexImpedance = std::complex<double>;

/// Shorted quarter-wave transmission-line section, Z = i Z0 tan(pi/2 w/wr).
struct QuarterWaveStub {
  double z0;
  AngularFrequency resonance;
  friend bool operator==(const QuarterWaveStub&, const QuarterWaveStub&) = default;
};

struct Capacitor {
  double farads;
  friend bool operator==(const Capacitor&, const Capacitor&) = default;
};

struct Inductor {
  double henries;
  friend bool operator==(const Inductor&, const Inductor&) = default;
};

class NetworkElement;

struct Series {
  std::vector<NetworkElement> children;
  friend bool operator==(const Series&, const Series&) = default;
};

struct Parallel {
  std::vector<NetworkElement> children;
  friend bool operator==(const Parallel&, const Parallel&) = default;
};

/// Lossless one-port built from stubs, lumped reactances and series/parallel
/// composites. Construction validates every node: values must be finite and
/// positive and composites non-empty, so a NetworkElement is always well formed.
class NetworkElement {
 public:
  using Node = std::variant<QuarterWaveStub, Capacitor, Inductor, Series, Parallel>;

  NetworkElement(QuarterWaveStub stub);
  NetworkElement(Capacitor c);
  NetworkElement(Inductor l);
  NetworkElement(Series s);
  NetworkElement(Parallel p);

  const Node& node() const noexcept { return node_; }

  /// Number of leaf elements in the tree.
  std::size_t leaf_count() const;

  friend bool operator==(const NetworkElement&, const NetworkElement&) = default;

 private:
  Node node_;
};

NetworkElement stub(double z0, AngularFrequency resonance);
NetworkElement capacitor(double farads);
NetworkElement inductor(double henries);
NetworkElement series(std::vector<NetworkElement> children);
NetworkElement parallel(std::vector<NetworkElement> children);

/// Reactance X of a lossless one-port stored projectively as num/den.
///
/// den == 0 is an open circuit (impedance pole), num == 0 a short. The pair is
/// kept normalised to unit length; its overall sign carries no meaning.
struct Reactance {
  double num;
  double den;

  /// Susceptance sign test without dividing: B = -1/X.
  bool susceptance_negative() const noexcept { return num * den > 0.0; }
};

/// Reactance of the whole tree. Series composition adds reactances and parallel
/// composition adds susceptances, both done on the projective pair, so internal
/// poles of sub-networks never produce infinities.
Reactance network_reactance(const NetworkElement& net, AngularFrequency w);

/// i*Z0*tan(pi/2 * w/wr). Throws PoleProximity when |cos| < 1e-14.
ComplexImpedance stub_impedance(AngularFrequency w, double z0, AngularFrequency resonance);

struct LumpedEquivalent {
  double capacitance;  // F
  double inductance;   // H
};

/// Parallel-LC equivalent of a quarter-wave resonator near its fundamental:
/// C = pi/(4 wr Z0), L = 1/(wr^2 C).
LumpedEquivalent lumped_equivalent(AngularFrequency resonance, double z0);

/// Parallel{Capacitor, Inductor} built from lumped_equivalent.
NetworkElement lumped_resonator(AngularFrequency resonance, double z0);

/// Impedance poles (X = inf) and zeros (X = 0) of a lossless network inside
/// the open interval (lo, hi), each sorted ascending.
struct FosterPoints {
  std::vector<double> poles;  // rad/s
  std::vector<double> zeros;  // rad/s
};

/// Enumerates the critical points exactly instead of by sampling. Series
/// composites inherit the union of their children's poles and have one zero
/// between consecutive poles (parallel composites the same with poles and
/// zeros swapped), so each root is bracketed before it is bisected and none
/// can be missed however narrow the resonance.
FosterPoints foster_points(const NetworkElement& net, AngularFrequency lo, AngularFrequency hi);

/// Z of the network. Throws PoleProximity when the total admittance is below 1e-18 S.
ComplexImpedance network_impedance(const NetworkElement& net, AngularFrequency w);

/// r = (Z - Z0)/(Z + Z0). Exactly +1 at an impedance pole and -1 at a short.
std::complex<double> reflection_coefficient(const NetworkElement& net, AngularFrequency w,
                                            double z0);

/// Principal value of arg r in (-pi, pi].
double reflection_phase(const NetworkElement& net, AngularFrequency w, double z0);

/// arg r computed from a reactance already in hand.
double reflection_phase(const Reactance& x, double z0) noexcept;

}  // namespace cqp

#endif  // CQP_NETWORK_HPP
