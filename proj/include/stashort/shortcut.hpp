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

// Shortcut for the off-resonant Lambda system built from an intermediate
// Hamiltonian: the admixture angle gamma(t) bends the dark state into
// |phi0~> = cos(theta)cos(gamma)|1> - i sin(gamma)|2> - sin(theta)cos(gamma)|3>,
// and the closure xi~ = 2 theta_dot / (sin(gamma) sin(2 phi)) removes the 1-3
// coupling from the resulting transitionless Hamiltonian.

#include <vector>

#include "stashort/framework.hpp"
#include "stashort/numkit.hpp"
#include "stashort/pulses.hpp"

namespace stashort {

struct ShortcutFrame {
  double theta = 0.0;
  double theta_dot = 0.0;
  double gamma = 0.0;
  double gamma_dot = 0.0;
  double phi = 0.0;
  double xi_tilde = 0.0;
};

// Frame from explicit angles; xi_tilde from the closure relation.
ShortcutFrame make_frame(double theta, double theta_dot, double gamma, double gamma_dot, double phi);

// Throws Error(GammaUnderflow) when gamma(t) <= 1e-12.
ShortcutFrame frame_at(double t, const PulseParams& p);

// Products of the correction coefficients with the original energy scale and
// angle rates.
struct LambdaKappaProducts {
  double lambda_p_xi0 = 0.0;
  double lambda_s_xi0 = 0.0;
  double lambda_d_xi0 = 0.0;
  double kappa_p_phidot = 0.0;
  double kappa_s_phidot = 0.0;
  double kappa_a_thetadot = 0.0;
};

// Throws Error(CotangentSingularity) for theta exactly 0 or pi/2.
LambdaKappaProducts lambda_kappa_coeffs(const ShortcutFrame& f);

// The same coefficients as a mask for framework::intermediate_h, given the
// original energy scale xi0 and a nonzero nominal phi_dot (only the products
// matter, so any value works).
CoefficientMask stirap_mask(const ShortcutFrame& f, double xi0, double phi_dot);

// Intermediate Hamiltonian assembled entry by entry; finite at theta in {0, pi/2}.
CMatrix intermediate_h0(const ShortcutFrame& f);

// Eigenbasis of the intermediate Hamiltonian, ordered {0, +, -}.
BasisSample intermediate_eigvecs(const ShortcutFrame& f);

MovingBasis intermediate_basis(const PulseParams& p);
// Instantaneous eigenbasis of h0 along the pulse, ordered {0, +, -}.
MovingBasis adiabatic_basis(const PulseParams& p);

struct ModifiedDrive {
  double omega_p_t = 0.0;
  double omega_s_t = 0.0;
  double phase_p = 0.0;
  double phase_s = 0.0;
  double delta_t = 0.0;
  double omega0_t = 0.0;
  double theta_t = 0.0;
  bool phase_p_undefined = false;
  bool phase_s_undefined = false;
};

ModifiedDrive modified_drive(const ShortcutFrame& f);

// (1/2) [[0, Wp e^{-i vp}, 0], [Wp e^{i vp}, 2 D, Ws e^{-i vs}], [0, Ws e^{i vs}, 0]]
CMatrix h_tilde(const ModifiedDrive& d);

TimeDependentHamiltonian shortcut_hamiltonian(const PulseParams& p);

struct SmallDetuningApprox {
  double omega0_approx = 0.0;
  double theta_approx = 0.0;
};

// Expansion around phi = pi/4 (vanishing detuning).
SmallDetuningApprox small_detuning_approx(const ShortcutFrame& f);

// Alternative admixture angle tied to a reference amplitude: atan(theta_dot / amplitude).
double gamma_adiabatic_reference(double theta_dot, double amplitude);

// Drive sampled on the uniform grid t_i + k T / steps, k = 0..steps.
struct DriveSamples {
  std::vector<double> t;
  std::vector<double> omega_p;
  std::vector<double> omega_s;
  std::vector<double> phase_p;
  std::vector<double> phase_s;
  std::vector<double> delta;
  std::vector<double> omega0;
  std::vector<double> theta;
  std::vector<double> gamma;
};

DriveSamples sample_drive(const PulseParams& p, int steps);

}  // namespace stashort
