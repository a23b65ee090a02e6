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

// The off-resonantly driven three-level Lambda system. Bare states are ordered
// |1> (initial ground), |2> (excited), |3> (target ground); hbar = 1.

#include <array>

#include "stashort/numkit.hpp"
#include "stashort/pulses.hpp"

namespace stashort {

struct LambdaDrive {
  double omega_p = 0.0;
  double omega_s = 0.0;
  double delta = 0.0;
};

struct MixingAngles {
  double theta = 0.0;
  double phi = 0.0;
  double xi0 = 0.0;  // sqrt(omega0^2 + delta^2)

  static MixingAngles from_drive(const LambdaDrive& d);
  LambdaDrive to_drive() const;
  double omega0() const;
};

// Eigenpairs in the order {dark (E0 = 0), upper (E+), lower (E-)}.
struct LambdaSpectrum {
  std::array<double, 3> energies{};
  std::array<CVector, 3> states{};
};

CMatrix h0(const LambdaDrive& d);

LambdaSpectrum spectrum_h0(const MixingAngles& a);

// Counterdiabatic term of h0 for given angle rates.
CMatrix h_cd(double theta_dot, double phi_dot, double theta);

// Drive of the uncorrected comparison run: constant amplitude omega0 split by
// theta(t), with the detuning that keeps phi fixed.
LambdaDrive reference_drive(double t, const PulseParams& p, double omega0);

// (Xi0 sin^2 phi) / (theta_dot cos phi) for the reference drive at time t.
double adiabaticity_ratio(double t, const PulseParams& p, double omega0);

// Minimum of adiabaticity_ratio over a uniform grid of the window.
double min_adiabaticity_ratio(const PulseParams& p, double omega0, int points = 4097);

}  // namespace stashort
