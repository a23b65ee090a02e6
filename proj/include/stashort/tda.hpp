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

// Transitionless driving for an arbitrary small Hamiltonian: the counterdiabatic
// term from instantaneous projectors, and adiabatic phases.

#include <vector>

#include "stashort/numkit.hpp"

namespace stashort {

struct CdEstimate {
  CMatrix h_cd;
  double error_estimate = 0.0;  // max |H_cd(h) - H_cd(2h)|
};

// i sum_{m != n} P_m dH/dt P_n / (E_n - E_m) with dH/dt by central difference.
// Throws Error(NearDegeneracy) when two eigenvalues are closer than
// gap_tol * max(1, |H|).
CMatrix cd_hamiltonian(const TimeDependentHamiltonian& h, double t, double step = 1e-6, double gap_tol = 1e-8);
CdEstimate cd_hamiltonian_checked(const TimeDependentHamiltonian& h, double t, double step = 1e-6,
                                  double gap_tol = 1e-8);

// H(t) + H_cd(t).
TimeDependentHamiltonian transitionless(TimeDependentHamiltonian h, double step = 1e-6);

struct AdiabaticPhase {
  int n = 0;
  double value = 0.0;      // dynamical + geometric
  double dynamical = 0.0;  // -int E_n dt
  double geometric = 0.0;  // zero in the gauge <n|dn/dt> = 0
};

// Phase accumulated by level n (ascending order) over t_grid, trapezoidal rule.
AdiabaticPhase adiabatic_phase(const TimeDependentHamiltonian& h, int n, const std::vector<double>& t_grid,
                               double gap_tol = 1e-8);

// Running phase at every grid point.
std::vector<double> adiabatic_phase_track(const TimeDependentHamiltonian& h, int n, const std::vector<double>& t_grid,
                                          double gap_tol = 1e-8);

// H(t) = (alpha t sigma_z + omega sigma_x) / 2.
TimeDependentHamiltonian landau_zener_fixture(double alpha, double omega);

// Closed-form counterdiabatic term of the Landau-Zener fixture:
// -(1/2) omega alpha / (alpha^2 t^2 + omega^2) sigma_y.
CMatrix landau_zener_cd(double alpha, double omega, double t);

}  // namespace stashort
