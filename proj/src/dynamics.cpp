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

#include "stashort/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stashort/errors.hpp"

namespace stashort {

namespace {

CMatrix evaluate(const TimeDependentHamiltonian& h, double t) {
  CMatrix m = h(t);
  if (!m.all_finite())
    throw Error(ErrorCode::HamiltonianEvaluationError, "non-finite Hamiltonian at t = " + std::to_string(t));
  return m;
}

std::vector<double> populations_of(const CVector& psi) {
  std::vector<double> p(psi.size());
  for (int i = 0; i < psi.size(); ++i) p[i] = std::norm(psi[i]);
  return p;
}

std::vector<double> populations_of(const CMatrix& rho) {
  std::vector<double> p(rho.dim());
  for (int i = 0; i < rho.dim(); ++i) p[i] = rho(i, i).real();
  return p;
}

void validate_grid(const TimeGrid& g) {
  if (g.steps < 1 || g.record_stride < 1 || !(g.t1 > g.t0))
    throw Error(ErrorCode::ConfigInvalid, "time grid needs steps >= 1, stride >= 1 and t1 > t0");
}

// -i H psi
CVector schrodinger_rhs(const CMatrix& h, const CVector& psi) { return (h * psi) * cplx(0.0, -1.0); }

CMatrix lindblad_rhs(const CMatrix& h, const CMatrix& rho, const LindbladParams& lp) {
  CMatrix d = commutator(h, rho) * cplx(0.0, -1.0);
  const double total = lp.gamma1 + lp.gamma3;
  if (total == 0.0) return d;
  const cplx p22 = rho(1, 1);
  d(0, 0) += lp.gamma1 * p22;
  d(2, 2) += lp.gamma3 * p22;
  // -(Gamma/2) (|2><2| rho + rho |2><2|)
  for (int k = 0; k < 3; ++k) {
    d(1, k) -= 0.5 * total * rho(1, k);
    d(k, 1) -= 0.5 * total * rho(k, 1);
  }
  return d;
}

double max_population_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TimeGrid refined(const TimeGrid& g) {
  TimeGrid f = g;
  f.steps = 2 * g.steps;
  f.record_stride = 2 * g.record_stride;
  return f;
}

}  // namespace

double Trajectory::final_population(int level) const {
  if (const auto* v = std::get_if<CVector>(&final_state)) return std::norm((*v)[level]);
  return std::get<CMatrix>(final_state)(level, level).real();
}

void LindbladParams::validate() const {
  if (!(gamma1 >= 0.0) || !(gamma3 >= 0.0) || !std::isfinite(gamma1) || !std::isfinite(gamma3))
    throw Error(ErrorCode::ConfigInvalid, "decay rates must be finite and non-negative");
}

Trajectory propagate_schrodinger(const TimeDependentHamiltonian& h, const CVector& psi0, const TimeGrid& grid,
                                 const PropagationOptions& options) {
  validate_grid(grid);
  Trajectory traj;
  CVector psi = psi0;
  const double dt = grid.dt();
  const double n0 = psi0.norm();
  auto record = [&](int k) {
    traj.times.push_back(grid.time(k));
    traj.populations.push_back(populations_of(psi));
    if (options.record_states) traj.states.push_back(psi);
  };
  record(0);
  for (int k = 0; k < grid.steps; ++k) {
    const double t = grid.time(k);
    const CMatrix h0 = evaluate(h, t);
    const CMatrix hm = evaluate(h, t + 0.5 * dt);
    const CMatrix h1 = evaluate(h, t + dt);
    const CVector k1 = schrodinger_rhs(h0, psi);
    const CVector k2 = schrodinger_rhs(hm, psi + k1 * cplx(0.5 * dt));
    const CVector k3 = schrodinger_rhs(hm, psi + k2 * cplx(0.5 * dt));
    const CVector k4 = schrodinger_rhs(h1, psi + k3 * cplx(dt));
    psi += (k1 + k2 * cplx(2.0) + k3 * cplx(2.0) + k4) * cplx(dt / 6.0);
    traj.norm_drift = std::max(traj.norm_drift, std::abs(psi.norm() - n0));
    if ((k + 1) % grid.record_stride == 0 || k + 1 == grid.steps) record(k + 1);
  }
  traj.final_state = psi;
  if (options.check_convergence) {
    PropagationOptions inner;
    inner.check_convergence = false;
    const Trajectory fine = propagate_schrodinger(h, psi0, refined(grid), inner);
    traj.convergence_checked = true;
    traj.convergence_delta = max_population_diff(populations_of(psi), populations_of(fine.final_vector()));
    traj.convergence_warning = traj.convergence_delta >= options.convergence_tol;
  }
  return traj;
}

Trajectory propagate_lindblad(const TimeDependentHamiltonian& h, const CMatrix& rho0, const LindbladParams& lp,
                              const TimeGrid& grid, const PropagationOptions& options) {
  validate_grid(grid);
  lp.validate();
  if (rho0.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "Lindblad propagation is defined for 3 levels");
  Trajectory traj;
  CMatrix rho = rho0.hermitian_part();
  const double dt = grid.dt();
  traj.min_eigenvalue = min_eigenvalue(rho);
  auto record = [&](int k) {
    traj.times.push_back(grid.time(k));
    traj.populations.push_back(populations_of(rho));
  };
  record(0);
  for (int k = 0; k < grid.steps; ++k) {
    const double t = grid.time(k);
    const CMatrix h0 = evaluate(h, t);
    const CMatrix hm = evaluate(h, t + 0.5 * dt);
    const CMatrix h1 = evaluate(h, t + dt);
    const CMatrix k1 = lindblad_rhs(h0, rho, lp);
    const CMatrix k2 = lindblad_rhs(hm, rho + k1 * cplx(0.5 * dt), lp);
    const CMatrix k3 = lindblad_rhs(hm, rho + k2 * cplx(0.5 * dt), lp);
    const CMatrix k4 = lindblad_rhs(h1, rho + k3 * cplx(dt), lp);
    rho += (k1 + k2 * cplx(2.0) + k3 * cplx(2.0) + k4) * cplx(dt / 6.0);
    rho = rho.hermitian_part();
    traj.norm_drift = std::max(traj.norm_drift, std::abs(rho.trace().real() - 1.0));
    const double lo = min_eigenvalue(rho);
    traj.min_eigenvalue = std::min(traj.min_eigenvalue, lo);
    if (lo < -1e-6)
      throw Error(ErrorCode::PositivityViolation,
                  "density matrix eigenvalue " + std::to_string(lo) + " at t = " + std::to_string(t + dt));
    if ((k + 1) % grid.record_stride == 0 || k + 1 == grid.steps) record(k + 1);
  }
  traj.final_state = rho;
  if (options.check_convergence) {
    PropagationOptions inner;
    inner.check_convergence = false;
    const Trajectory fine = propagate_lindblad(h, rho0, lp, refined(grid), inner);
    traj.convergence_checked = true;
    traj.convergence_delta = max_population_diff(populations_of(rho), populations_of(fine.final_density()));
    traj.convergence_warning = traj.convergence_delta >= options.convergence_tol;
  }
  return traj;
}

int recommended_steps(const TimeDependentHamiltonian& h, double t0, double t1, int base_steps,
                      double max_phase_per_step) {
  double peak = 0.0;
  for (int k = 0; k <= base_steps; ++k) {
    const double t = t0 + (t1 - t0) * k / base_steps;
    peak = std::max(peak, evaluate(h, t).norm());
  }
  const double needed = std::ceil((t1 - t0) * peak / max_phase_per_step);
  int steps = std::max(base_steps, static_cast<int>(std::min(needed, 1e8)));
  return (steps + 7) / 8 * 8;
}

}  // namespace stashort
