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

// Scalar figures of merit for a shortcut run.

#include <vector>

#include "stashort/pulses.hpp"

namespace stashort {

struct PulseArea {
  double radians = 0.0;
  double over_pi = 0.0;
};

// Trapezoid of f on a uniform grid. Throws Error(DimensionMismatch) on size
// mismatch and Error(ConfigInvalid) on fewer than two or non-uniform points.
double trapezoid(const std::vector<double>& t, const std::vector<double>& f);

// Area of sqrt(omega_p^2 + omega_s^2).
PulseArea pulse_area(const std::vector<double>& t, const std::vector<double>& omega_p,
                     const std::vector<double>& omega_s);
// Area of the total amplitude omega0 directly.
PulseArea pulse_area(const std::vector<double>& t, const std::vector<double>& omega0);
// Area of the shortcut drive sampled on `steps` intervals.
PulseArea shortcut_pulse_area(const PulseParams& p, int steps = 4096);

// Mean of sin^2 over the admixture range [0, pi gamma0].
double p2_bar(double gamma0);
// Mean of sin^2 over [gamma_min, gamma_max]; the plain value sin^2 when the range is empty.
double p2_bar_range(double gamma_min, double gamma_max);

double epsilon(double gamma_a, double p2bar, double t_omega_max);

struct OmegaMax {
  double numeric_max = 0.0;     // max of sqrt(Wp^2 + Ws^2) over the grid
  double t_at_max = 0.0;
  double closed_at_argmax = 0.0;  // closed-form total amplitude at the grid argmax
  double at_t0 = 0.0;           // closed-form total amplitude at t = 0
  double closed_form_peak = 0.0;
};

OmegaMax omega_max(const PulseParams& p, int points = 4096);

// (pi / tau) sqrt(cot^2(pi g0) + 4 cot^2(2 phi) / cos^2(pi g0))
double omega_max_peak_formula(const PulseParams& p);

struct RunSummary {
  double area_over_pi = 0.0;
  double t_omega_max = 0.0;
  double p2_bar = 0.0;
  double epsilon = 0.0;
  double p3_final = 0.0;
  double fidelity_sq = 0.0;
  double deviation = 0.0;
};

RunSummary make_run_summary(double p3_final, double area_over_pi, double t_omega_max, double p2bar,
                            double gamma_a);

// One point of a shape-parameter sweep (no propagation).
struct SweepPoint {
  PulseParams params;
  double area_over_pi = 0.0;
  double t_omega_max = 0.0;
  double p2_bar = 0.0;
  double epsilon = 0.0;
};

SweepPoint evaluate_point(const PulseParams& p, double gamma_a = 0.5, int points = 4096);

// Points are evaluated on `jobs` workers; output order follows the input.
std::vector<SweepPoint> sweep(const std::vector<PulseParams>& points, double gamma_a = 0.5, int jobs = 1);

// gamma0 x phi grid around `base`, gamma0 varying fastest.
std::vector<PulseParams> gamma_phi_grid(const PulseParams& base, const std::vector<double>& gamma0s,
                                        const std::vector<double>& phis);

std::vector<double> linspace(double lo, double hi, int n);

bool strictly_decreasing(const std::vector<double>& v);
bool non_decreasing(const std::vector<double>& v, double slack = 0.0);

}  // namespace stashort
