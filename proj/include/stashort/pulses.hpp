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

#pragma once

#include <numbers>
#include <optional>

namespace stashort {

// Shape parameters of one run. Times are absolute (the default window length
// T is 1, so every frequency reads in units of 1/T).
struct PulseParams {
  double T = 1.0;
  double tau = 0.115;        // sigmoid width of the mixing angle
  double tau_c = 0.3;        // Gaussian width of the admixture angle
  double gamma0 = 0.1;       // peak admixture factor, gamma(0) = pi * gamma0
  double phi = std::numbers::pi / 5.0;
  double omega0_ref = 16.0;  // constant amplitude of the uncorrected comparison run

  // Super-Gaussian envelope chi * exp(-(t/T0)^(2n)); only used by reference runs.
  std::optional<double> chi;
  std::optional<double> T0;
  std::optional<int> n;

  double t_initial() const { return -0.5 * T; }
  double t_final() const { return 0.5 * T; }

  // Throws Error(ConfigInvalid) naming the first violated bound.
  void validate() const;
};

double theta(double t, const PulseParams& p);
double theta_dot(double t, const PulseParams& p);
double gamma(double t, const PulseParams& p);
double gamma_dot(double t, const PulseParams& p);

// Throws Error(ConfigMissing) unless chi, T0 and n are all set.
double omega0_envelope(double t, const PulseParams& p);

}  // namespace stashort
