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

#include "stashort/pulses.hpp"

#include <cmath>
#include <string>

#include "stashort/errors.hpp"

namespace stashort {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ConfigInvalid, what);
}

}  // namespace

void PulseParams::validate() const {
  require(std::isfinite(T) && T > 0.0, "T must be positive");
  require(std::isfinite(tau) && tau > 0.0 && tau <= 0.12 * T, "tau must satisfy 0 < tau <= 0.12 T");
  require(std::isfinite(tau_c) && tau_c > 0.2 * T && tau_c <= 0.3 * T, "tau_c must satisfy 0.2 T < tau_c <= 0.3 T");
  require(std::isfinite(gamma0) && gamma0 > 0.0 && gamma0 < 0.5, "gamma0 must satisfy 0 < gamma0 < 0.5");
  require(std::isfinite(phi) && phi > 0.0 && phi <= std::numbers::pi / 4.0 + 1e-15, "phi must satisfy 0 < phi <= pi/4");
  require(std::isfinite(omega0_ref) && omega0_ref >= 0.0, "omega0_ref must be non-negative");
  if (chi) require(std::isfinite(*chi) && *chi >= 0.0, "chi must be non-negative");
  if (T0) require(std::isfinite(*T0) && *T0 > 0.0, "T0 must be positive");
  if (n) require(*n >= 1, "n must be >= 1");
}

// Written with tanh/cosh so that |t| >> tau neither overflows nor produces
// inf/inf in the derivative.
double theta(double t, const PulseParams& p) {
  return 0.25 * std::numbers::pi * (1.0 + std::tanh(0.5 * t / p.tau));
}

double theta_dot(double t, const PulseParams& p) {
  const double c = std::cosh(0.5 * t / p.tau);
  return std::numbers::pi / (8.0 * p.tau * c * c);
}

double gamma(double t, const PulseParams& p) {
  return std::numbers::pi * p.gamma0 * std::exp(-(t * t) / (p.tau_c * p.tau_c));
}

double gamma_dot(double t, const PulseParams& p) {
  const double w2 = p.tau_c * p.tau_c;
  return -2.0 * std::numbers::pi * p.gamma0 * t / w2 * std::exp(-(t * t) / w2);
}

double omega0_envelope(double t, const PulseParams& p) {
  if (!p.chi || !p.T0 || !p.n) throw Error(ErrorCode::ConfigMissing, "omega0_envelope needs chi, T0 and n");
  return *p.chi * std::exp(-std::pow(std::abs(t / *p.T0), 2.0 * *p.n));
}

}  // namespace stashort
