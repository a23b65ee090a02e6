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

#include "stashort/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parallel.hpp"
#include "stashort/errors.hpp"
#include "stashort/shortcut.hpp"

namespace stashort {

namespace {

PulseArea make_area(double radians) { return {radians, radians / std::numbers::pi}; }

}  // namespace

double trapezoid(const std::vector<double>& t, const std::vector<double>& f) {
  if (t.size() != f.size()) throw Error(ErrorCode::DimensionMismatch, "trapezoid: grid and samples differ in size");
  if (t.size() < 2) throw Error(ErrorCode::ConfigInvalid, "trapezoid: need at least two points");
  const double h = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  for (std::size_t k = 1; k < t.size(); ++k)
    if (std::abs((t[k] - t[k - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw Error(ErrorCode::ConfigInvalid, "trapezoid: grid is not uniform");
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t k = 1; k + 1 < f.size(); ++k) s += f[k];
  return s * h;
}

PulseArea pulse_area(const std::vector<double>& t, const std::vector<double>& omega_p,
                     const std::vector<double>& omega_s) {
  if (omega_p.size() != omega_s.size())
    throw Error(ErrorCode::DimensionMismatch, "pulse_area: pump and Stokes samples differ in size");
  std::vector<double> w(omega_p.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = std::hypot(omega_p[k], omega_s[k]);
  return make_area(trapezoid(t, w));
}

PulseArea pulse_area(const std::vector<double>& t, const std::vector<double>& omega0) {
  return make_area(trapezoid(t, omega0));
}

PulseArea shortcut_pulse_area(const PulseParams& p, int steps) {
  const DriveSamples s = sample_drive(p, steps);
  return pulse_area(s.t, s.omega0);
}

double p2_bar(double gamma0) {
  const double x = 2.0 * std::numbers::pi * gamma0;
  return 0.5 - std::sin(x) / (2.0 * x);
}

double p2_bar_range(double gamma_min, double gamma_max) {
  const double w = gamma_max - gamma_min;
  if (w == 0.0) return std::pow(std::sin(gamma_min), 2);
  return 0.5 - (std::sin(2.0 * gamma_max) - std::sin(2.0 * gamma_min)) / (4.0 * w);
}

double epsilon(double gamma_a, double p2bar, double t_omega_max) { return gamma_a * p2bar * t_omega_max; }

double omega_max_peak_formula(const PulseParams& p) {
  const double pg = std::numbers::pi * p.gamma0;
  const double cot_g = 1.0 / std::tan(pg);
  const double cot_2p = std::cos(2.0 * p.phi) / std::sin(2.0 * p.phi);
  const double cg = std::cos(pg);
  return (std::numbers::pi / p.tau) * std::sqrt(cot_g * cot_g + 4.0 * cot_2p * cot_2p / (cg * cg));
}

OmegaMax omega_max(const PulseParams& p, int points) {
  const DriveSamples s = sample_drive(p, points);
  OmegaMax out;
  std::size_t arg = 0;
  for (std::size_t k = 0; k < s.t.size(); ++k) {
    const double w = std::hypot(s.omega_p[k], s.omega_s[k]);
    if (w > out.numeric_max) {
      out.numeric_max = w;
      arg = k;
    }
  }
  out.t_at_max = s.t[arg];
  out.closed_at_argmax = modified_drive(frame_at(out.t_at_max, p)).omega0_t;
  out.at_t0 = modified_drive(frame_at(0.0, p)).omega0_t;
  out.closed_form_peak = omega_max_peak_formula(p);
  return out;
}

RunSummary make_run_summary(double p3_final, double area_over_pi, double t_omega_max, double p2bar,
                            double gamma_a) {
  RunSummary r;
  r.area_over_pi = area_over_pi;
  r.t_omega_max = t_omega_max;
  r.p2_bar = p2bar;
  r.epsilon = epsilon(gamma_a, p2bar, t_omega_max);
  r.p3_final = p3_final;
  r.fidelity_sq = p3_final * p3_final;
  r.deviation = 1.0 - p3_final;
  return r;
}

SweepPoint evaluate_point(const PulseParams& p, double gamma_a, int points) {
  p.validate();
  SweepPoint sp;
  sp.params = p;
  sp.area_over_pi = shortcut_pulse_area(p, points).over_pi;
  sp.t_omega_max = omega_max(p, points).numeric_max * p.T;
  sp.p2_bar = p2_bar(p.gamma0);
  sp.epsilon = epsilon(gamma_a, sp.p2_bar, sp.t_omega_max);
  return sp;
}

std::vector<SweepPoint> sweep(const std::vector<PulseParams>& points, double gamma_a, int jobs) {
  std::vector<SweepPoint> out(points.size());
  detail::parallel_for(points.size(), jobs, [&](std::size_t i) { out[i] = evaluate_point(points[i], gamma_a); });
  return out;
}

std::vector<PulseParams> gamma_phi_grid(const PulseParams& base, const std::vector<double>& gamma0s,
                                        const std::vector<double>& phis) {
  std::vector<PulseParams> out;
  for (double phi : phis)
    for (double g : gamma0s) {
      PulseParams p = base;
      p.gamma0 = g;
      p.phi = phi;
      out.push_back(p);
    }
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) return {};
  if (n == 1) return {lo};
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

bool non_decreasing(const std::vector<double>& v, double slack) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1] - slack) return false;
  return true;
}

}  // namespace stashort
