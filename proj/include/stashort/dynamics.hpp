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

// Fixed-step classical Runge-Kutta propagation of state vectors (Schrodinger)
// and 3-level density matrices (Lindblad, decay out of |2>).

#include <variant>
#include <vector>

#include "stashort/numkit.hpp"

namespace stashort {

struct TimeGrid {
  double t0 = -0.5;
  double t1 = 0.5;
  int steps = 4096;
  int record_stride = 8;

  double dt() const { return (t1 - t0) / steps; }
  double time(int k) const { return t0 + k * dt(); }
};

struct PropagationOptions {
  // Rerun with half the step and compare final populations.
  bool check_convergence = true;
  double convergence_tol = 1e-7;
  // Keep the state at every recorded time (vectors only).
  bool record_states = false;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> populations;
  std::variant<CVector, CMatrix> final_state;
  std::vector<CVector> states;

  // max | |psi| - 1 | or max | tr rho - 1 | over every step.
  double norm_drift = 0.0;
  // Lindblad runs: smallest eigenvalue of rho seen over every step.
  double min_eigenvalue = 0.0;

  bool convergence_checked = false;
  bool convergence_warning = false;
  double convergence_delta = 0.0;

  const CVector& final_vector() const { return std::get<CVector>(final_state); }
  const CMatrix& final_density() const { return std::get<CMatrix>(final_state); }
  // Population of a level (0-based) at t1.
  double final_population(int level) const;
};

struct LindbladParams {
  double gamma1 = 0.0;  // |2> -> |1>
  double gamma3 = 0.0;  // |2> -> |3>
  void validate() const;
};

// Throws Error(HamiltonianEvaluationError) on non-finite H entries.
Trajectory propagate_schrodinger(const TimeDependentHamiltonian& h, const CVector& psi0, const TimeGrid& grid,
                                 const PropagationOptions& options = {});

// d rho/dt = -i[H, rho] + sum_{n=1,3} Gamma_n (S_n rho S_n^+ - {S_n^+ S_n, rho}/2), S_n = |n><2|.
// rho is re-symmetrized every step. Throws Error(PositivityViolation) if its
// smallest eigenvalue drops below -1e-6.
Trajectory propagate_lindblad(const TimeDependentHamiltonian& h, const CMatrix& rho0, const LindbladParams& lp,
                              const TimeGrid& grid, const PropagationOptions& options = {});

// Smallest step count >= base_steps (rounded up to a multiple of 8) keeping
// dt * max_t |H(t)| <= max_phase_per_step, with |H| sampled on base_steps points.
int recommended_steps(const TimeDependentHamiltonian& h, double t0, double t1, int base_steps = 4096,
                      double max_phase_per_step = 0.05);

}  // namespace stashort
