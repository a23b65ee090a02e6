/* Copyright 2026 The stashort Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "stashort/lambda3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stashort {

MixingAngles MixingAngles::from_drive(const LambdaDrive& d) {
  const double omega0 = std::hypot(d.omega_p, d.omega_s);
  return MixingAngles{std::atan2(d.omega_p, d.omega_s), 0.5 * std::atan2(omega0, d.delta), std::hypot(omega0, d.delta)};
}

double MixingAngles::omega0() const { return xi0 * std::sin(2.0 * phi); }

LambdaDrive MixingAngles::to_drive() const {
  const double omega = omega0();
  return LambdaDrive{omega * std::sin(theta), omega * std::cos(theta), xi0 * std::cos(2.0 * phi)};
}

CMatrix h0(const LambdaDrive& d) {
  CMatrix h(3);
  h(0, 1) = h(1, 0) = 0.5 * d.omega_p;
  h(1, 2) = h(2, 1) = 0.5 * d.omega_s;
  h(1, 1) = d.delta;
  return h;
}

LambdaSpectrum spectrum_h0(const MixingAngles& a) {
  const double st = std::sin(a.theta), ct = std::cos(a.theta);
  const double sp = std::sin(a.phi), cp = std::cos(a.phi);
  LambdaSpectrum s;
  s.energies = {0.0, a.xi0 * cp * cp, -a.xi0 * sp * sp};
  s.states[0] = CVector{ct, 0.0, -st};
  s.states[1] = CVector{st * sp, cp, ct * sp};
  s.states[2] = CVector{st * cp, -sp, ct * cp};
  return s;
}

CMatrix h_cd(double theta_dot, double phi_dot, double theta) {
  const double st = std::sin(theta), ct = std::cos(theta);
  CMatrix h(3);
  h(0, 1) = kI * (phi_dot * st);
  h(0, 2) = kI * theta_dot;
  h(1, 0) = -kI * (phi_dot * st);
  h(1, 2) = -kI * (phi_dot * ct);
  h(2, 0) = -kI * theta_dot;
  h(2, 1) = kI * (phi_dot * ct);
  return h;
}

LambdaDrive reference_drive(double t, const PulseParams& p, double omega0) {
  const double th = theta(t, p);
  // cot(2 phi) written as cos/sin so phi = pi/4 gives exactly zero detuning
  // up to rounding of cos(pi/2).
  const double delta = omega0 * std::cos(2.0 * p.phi) / std::sin(2.0 * p.phi);
  return LambdaDrive{omega0 * std::sin(th), omega0 * std::cos(th), delta};
}

double adiabaticity_ratio(double t, const PulseParams& p, double omega0) {
  const double xi0 = omega0 / std::sin(2.0 * p.phi);
  const double sp = std::sin(p.phi);
  return xi0 * sp * sp / (theta_dot(t, p) * std::cos(p.phi));
}

double min_adiabaticity_ratio(const PulseParams& p, double omega0, int points) {
  double best = std::numeric_limits<double>::infinity();
  const double t0 = p.t_initial(), t1 = p.t_final();
  for (int i = 0; i < points; ++i) {
    const double t = t0 + (t1 - t0) * i / (points - 1);
    best = std::min(best, adiabaticity_ratio(t, p, omega0));
  }
  return best;
}

}  // namespace stashort
