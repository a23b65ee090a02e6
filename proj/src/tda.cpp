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

#include "stashort/tda.hpp"

#include <cmath>
#include <string>

#include "stashort/errors.hpp"

namespace stashort {

namespace {

CMatrix projector_cd(const HermitianEig& e, const CMatrix& hdot) {
  const int n = static_cast<int>(e.values.size());
  CMatrix out(hdot.dim());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      // P_a Hdot P_b = |a><a|Hdot|b><b|
      const cplx elem = e.vectors[a].dot(hdot * e.vectors[b]);
      out += (kI * elem / (e.values[b] - e.values[a])) * CMatrix::outer(e.vectors[a], e.vectors[b]);
    }
  }
  return out;
}

HermitianEig checked_eig(const CMatrix& m, double gap_tol) {
  HermitianEig e = hermitian_eig(m);
  const double scale = std::max(1.0, m.max_abs());
  for (std::size_t i = 1; i < e.values.size(); ++i)
    if (e.values[i] - e.values[i - 1] < gap_tol * scale)
      throw Error(ErrorCode::NearDegeneracy, "spectral gap " + std::to_string(e.values[i] - e.values[i - 1]));
  return e;
}

}  // namespace

CdEstimate cd_hamiltonian_checked(const TimeDependentHamiltonian& h, double t, double step, double gap_tol) {
  const HermitianEig e = checked_eig(h(t), gap_tol);
  const CMatrix d1 = (h(t + step) - h(t - step)) * cplx(1.0 / (2.0 * step));
  const CMatrix d2 = (h(t + 2.0 * step) - h(t - 2.0 * step)) * cplx(1.0 / (4.0 * step));
  CdEstimate out;
  out.h_cd = projector_cd(e, d1);
  out.error_estimate = out.h_cd.max_abs_diff(projector_cd(e, d2));
  return out;
}

CMatrix cd_hamiltonian(const TimeDependentHamiltonian& h, double t, double step, double gap_tol) {
  return cd_hamiltonian_checked(h, t, step, gap_tol).h_cd;
}

TimeDependentHamiltonian transitionless(TimeDependentHamiltonian h, double step) {
  return [h = std::move(h), step](double t) { return h(t) + cd_hamiltonian(h, t, step); };
}

std::vector<double> adiabatic_phase_track(const TimeDependentHamiltonian& h, int n, const std::vector<double>& t_grid,
                                          double gap_tol) {
  std::vector<double> track;
  if (t_grid.empty()) return track;
  track.reserve(t_grid.size());
  double prev_e = checked_eig(h(t_grid.front()), gap_tol).values.at(n);
  double acc = 0.0;
  track.push_back(0.0);
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    const double e = checked_eig(h(t_grid[k]), gap_tol).values.at(n);
    acc -= 0.5 * (e + prev_e) * (t_grid[k] - t_grid[k - 1]);
    track.push_back(acc);
    prev_e = e;
  }
  return track;
}

AdiabaticPhase adiabatic_phase(const TimeDependentHamiltonian& h, int n, const std::vector<double>& t_grid,
                               double gap_tol) {
  const auto track = adiabatic_phase_track(h, n, t_grid, gap_tol);
  AdiabaticPhase out;
  out.n = n;
  out.dynamical = track.empty() ? 0.0 : track.back();
  out.geometric = 0.0;
  out.value = out.dynamical + out.geometric;
  return out;
}

TimeDependentHamiltonian landau_zener_fixture(double alpha, double omega) {
  if (!(omega > 0.0)) throw Error(ErrorCode::ConfigInvalid, "Landau-Zener coupling must be positive");
  return [alpha, omega](double t) {
    return CMatrix{{0.5 * alpha * t, 0.5 * omega}, {0.5 * omega, -0.5 * alpha * t}};
  };
}

CMatrix landau_zener_cd(double alpha, double omega, double t) {
  const double c = -0.5 * omega * alpha / (alpha * alpha * t * t + omega * omega);
  // c * sigma_y
  return CMatrix{{0.0, cplx(0.0, -c)}, {cplx(0.0, c), 0.0}};
}

}  // namespace stashort
