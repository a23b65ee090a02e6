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

#include "stashort/shortcut.hpp"

#include <cmath>
#include <numbers>

#include "stashort/errors.hpp"
#include "stashort/lambda3.hpp"

namespace stashort {

ShortcutFrame make_frame(double theta, double theta_dot, double gamma, double gamma_dot, double phi) {
  ShortcutFrame f{theta, theta_dot, gamma, gamma_dot, phi, 0.0};
  f.xi_tilde = 2.0 * theta_dot / (std::sin(gamma) * std::sin(2.0 * phi));
  return f;
}

ShortcutFrame frame_at(double t, const PulseParams& p) {
  const double g = gamma(t, p);
  if (!(g > 1e-12)) throw Error(ErrorCode::GammaUnderflow, "gamma(t) <= 1e-12 at t = " + std::to_string(t));
  return make_frame(theta(t, p), theta_dot(t, p), g, gamma_dot(t, p), p.phi);
}

LambdaKappaProducts lambda_kappa_coeffs(const ShortcutFrame& f) {
  if (f.theta == 0.0 || f.theta == 0.5 * std::numbers::pi)
    throw Error(ErrorCode::CotangentSingularity, "cot/tan of theta undefined at theta in {0, pi/2}");
  const double x = f.xi_tilde;
  const double cg = std::cos(f.gamma), tg = std::tan(f.gamma);
  const double c2p = std::cos(2.0 * f.phi);
  LambdaKappaProducts k;
  k.lambda_p_xi0 = x * cg;
  k.lambda_s_xi0 = x * cg;
  k.lambda_d_xi0 = x * std::cos(2.0 * f.gamma) / (cg * cg);
  k.kappa_p_phidot = x * tg * c2p / std::tan(f.theta);
  k.kappa_s_phidot = -x * std::tan(f.theta) * tg * c2p;
  k.kappa_a_thetadot = 0.5 * x * std::sin(f.gamma) * std::sin(2.0 * f.phi);
  return k;
}

CoefficientMask stirap_mask(const ShortcutFrame& f, double xi0, double phi_dot) {
  const LambdaKappaProducts k = lambda_kappa_coeffs(f);
  CoefficientMask m(3);
  m.set_lambda(0, 1, k.lambda_p_xi0 / xi0);
  m.set_lambda(1, 2, k.lambda_s_xi0 / xi0);
  m.lambda_at(1, 1) = k.lambda_d_xi0 / xi0;
  m.set_kappa(0, 1, k.kappa_p_phidot / phi_dot);
  m.set_kappa(1, 2, k.kappa_s_phidot / phi_dot);
  m.set_kappa(0, 2, k.kappa_a_thetadot / f.theta_dot);
  return m;
}

CMatrix intermediate_h0(const ShortcutFrame& f) {
  const double x = f.xi_tilde;
  const double st = std::sin(f.theta), ct = std::cos(f.theta);
  const double sg = std::sin(f.gamma), cg = std::cos(f.gamma), tg = std::tan(f.gamma);
  const double s2p = std::sin(2.0 * f.phi), c2p = std::cos(2.0 * f.phi);
  CMatrix h(3);
  // kappa_p phi_dot sin(theta) = x cos(theta) tan(gamma) cos(2 phi), and the
  // Stokes counterpart likewise; no cot/tan of theta is formed.
  h(0, 1) = cplx(0.5 * x * cg * s2p * st, -x * ct * tg * c2p);
  h(1, 2) = cplx(0.5 * x * cg * s2p * ct, -x * st * tg * c2p);
  h(0, 2) = cplx(0.0, -0.5 * x * sg * s2p);
  h(1, 1) = x * std::cos(2.0 * f.gamma) * c2p / (cg * cg);
  h(1, 0) = std::conj(h(0, 1));
  h(2, 1) = std::conj(h(1, 2));
  h(2, 0) = std::conj(h(0, 2));
  return h;
}

BasisSample intermediate_eigvecs(const ShortcutFrame& f) {
  const double st = std::sin(f.theta), ct = std::cos(f.theta);
  const double sg = std::sin(f.gamma), cg = std::cos(f.gamma), tg = std::tan(f.gamma);
  const double sp = std::sin(f.phi), cp = std::cos(f.phi);
  const double x = f.xi_tilde;
  BasisSample b;
  b.states = {
      CVector{ct * cg, cplx(0.0, -sg), -st * cg},
      CVector{cplx(st * sp, -ct * cp * sg), cp * cg, cplx(ct * sp, st * cp * sg)},
      CVector{cplx(st * cp, ct * sp * sg), -sp * cg, cplx(ct * cp, -st * sp * sg)},
  };
  const double sp2 = sp * sp, cp2 = cp * cp;
  b.energies = {x * (sp2 * sp2 - cp2 * cp2) * tg * tg, x * cp2, -x * sp2};
  return b;
}

MovingBasis intermediate_basis(const PulseParams& p) {
  return [p](double t) { return intermediate_eigvecs(frame_at(t, p)); };
}

MovingBasis adiabatic_basis(const PulseParams& p) {
  return [p](double t) {
    const LambdaSpectrum s = spectrum_h0(MixingAngles{theta(t, p), p.phi, 1.0});
    BasisSample b;
    b.states.assign(s.states.begin(), s.states.end());
    b.energies.assign(s.energies.begin(), s.energies.end());
    return b;
  };
}

ModifiedDrive modified_drive(const ShortcutFrame& f) {
  const double x = f.xi_tilde;
  const double st = std::sin(f.theta), ct = std::cos(f.theta);
  const double cg = std::cos(f.gamma), tg = std::tan(f.gamma);
  const double s2p = std::sin(2.0 * f.phi), c2p = std::cos(2.0 * f.phi);
  const double gd2 = 2.0 * f.gamma_dot;

  // <2|H|1> = (p_re + i p_im) / 2 and <3|H|2> = (s_re + i s_im) / 2.
  const double p_re = x * cg * st * s2p + gd2 * ct;
  const double p_im = 2.0 * x * tg * ct * c2p;
  const double s_re = x * cg * ct * s2p - gd2 * st;
  const double s_im = 2.0 * x * tg * st * c2p;

  ModifiedDrive d;
  d.omega_p_t = std::hypot(p_re, p_im);
  d.omega_s_t = std::hypot(s_re, s_im);
  d.phase_p_undefined = (p_re == 0.0 && p_im == 0.0);
  d.phase_s_undefined = (s_re == 0.0 && s_im == 0.0);
  d.phase_p = d.phase_p_undefined ? 0.0 : std::atan2(p_im, p_re);
  d.phase_s = d.phase_s_undefined ? 0.0 : std::atan2(s_im, s_re);
  d.delta_t = x * std::cos(2.0 * f.gamma) * c2p / (cg * cg);
  const double a = x * cg * s2p;
  const double b = 2.0 * x * tg * c2p;
  d.omega0_t = std::sqrt(a * a + b * b + gd2 * gd2);
  d.theta_t = std::atan2(d.omega_p_t, d.omega_s_t);
  return d;
}

CMatrix h_tilde(const ModifiedDrive& d) {
  CMatrix h(3);
  const cplx pump = 0.5 * d.omega_p_t * std::polar(1.0, d.phase_p);
  const cplx stokes = 0.5 * d.omega_s_t * std::polar(1.0, d.phase_s);
  h(1, 0) = pump;
  h(0, 1) = std::conj(pump);
  h(2, 1) = stokes;
  h(1, 2) = std::conj(stokes);
  h(1, 1) = d.delta_t;
  return h;
}

TimeDependentHamiltonian shortcut_hamiltonian(const PulseParams& p) {
  return [p](double t) { return h_tilde(modified_drive(frame_at(t, p))); };
}

SmallDetuningApprox small_detuning_approx(const ShortcutFrame& f) {
  // Reference amplitude sqrt((lambda_p Omega_p)^2 + (lambda_s Omega_s)^2) in
  // Hamiltonian-entry units, i.e. half of xi~ cos(gamma).
  const double amplitude = 0.5 * f.xi_tilde * std::cos(f.gamma);
  SmallDetuningApprox a;
  a.omega0_approx = std::sqrt(4.0 * amplitude * amplitude + 4.0 * f.gamma_dot * f.gamma_dot);
  a.theta_approx = f.theta + std::atan(f.gamma_dot / amplitude);
  return a;
}

double gamma_adiabatic_reference(double theta_dot, double amplitude) { return std::atan2(theta_dot, amplitude); }

DriveSamples sample_drive(const PulseParams& p, int steps) {
  DriveSamples s;
  const double t0 = p.t_initial();
  const double dt = p.T / steps;
  for (int k = 0; k <= steps; ++k) {
    const double t = t0 + k * dt;
    const ShortcutFrame f = frame_at(t, p);
    const ModifiedDrive d = modified_drive(f);
    s.t.push_back(t);
    s.omega_p.push_back(d.omega_p_t);
    s.omega_s.push_back(d.omega_s_t);
    s.phase_p.push_back(d.phase_p);
    s.phase_s.push_back(d.phase_s);
    s.delta.push_back(d.delta_t);
    s.omega0.push_back(d.omega0_t);
    s.theta.push_back(d.theta_t);
    s.gamma.push_back(f.gamma);
  }
  return s;
}

}  // namespace stashort
