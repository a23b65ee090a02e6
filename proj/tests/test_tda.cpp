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

#include <cmath>

#include "doctest.h"
#include "stashort/dynamics.hpp"
#include "stashort/errors.hpp"
#include "stashort/lambda3.hpp"
#include "stashort/tda.hpp"
#include "test_util.hpp"

using namespace stashort;
using stashort::testing::kPi;
using stashort::testing::overlap;

namespace {

// Fidelity with the instantaneous eigenstate n along a run under H + H_cd.
double worst_tracking(const TimeDependentHamiltonian& h, int n, double t0, double t1, int steps) {
  PropagationOptions opt;
  opt.check_convergence = false;
  opt.record_states = true;
  const CVector psi0 = hermitian_eig(h(t0)).vectors[n];
  const Trajectory tr = propagate_schrodinger(transitionless(h), psi0, TimeGrid{t0, t1, steps, 4}, opt);
  double worst = 1.0;
  for (std::size_t k = 0; k < tr.times.size(); ++k)
    worst = std::min(worst, overlap(hermitian_eig(h(tr.times[k])).vectors[n], tr.states[k]));
  return worst;
}

}  // namespace

TEST_SUITE("tda") {

TEST_CASE("constant Hamiltonian needs no correction") {
  const CMatrix m = h0({1.0, 2.0, 0.3});
  const TimeDependentHamiltonian h = [m](double) { return m; };
  CHECK(cd_hamiltonian(h, 0.2).max_abs() <= 1e-10);
}

TEST_CASE("resonant STIRAP correction couples 1 and 3 only") {
  const PulseParams p;
  const TimeDependentHamiltonian h = [&](double t) {
    return h0(MixingAngles{theta(t, p), kPi / 4.0, 12.0}.to_drive());
  };
  for (double t : {-0.3, 0.0, 0.25}) {
    const CMatrix cd = cd_hamiltonian(h, t);
    const CMatrix expect = h_cd(theta_dot(t, p), 0.0, theta(t, p));
    CHECK(cd.max_abs_diff(expect) <= 1e-6);
    CHECK(std::abs(cd(0, 2) - cplx(0.0, theta_dot(t, p))) <= 1e-6);
  }
}

TEST_CASE("off-resonant STIRAP correction matches the analytic term") {
  const PulseParams p;
  const TimeDependentHamiltonian h = [&](double t) { return h0(reference_drive(t, p, 20.0)); };
  for (int k = 0; k < 40; ++k) {
    const double t = -0.5 + (k + 0.5) / 40.0;
    const CdEstimate est = cd_hamiltonian_checked(h, t);
    CHECK(est.h_cd.max_abs_diff(h_cd(theta_dot(t, p), 0.0, theta(t, p))) <= 1e-6);
    CHECK(est.error_estimate <= 1e-5);
    CHECK(est.h_cd.hermitian(1e-8));
  }
}

TEST_CASE("correction has no diagonal in the instantaneous eigenbasis") {
  const TimeDependentHamiltonian h = landau_zener_fixture(3.0, 0.7);
  for (double t : {-1.0, 0.0, 0.4}) {
    const CMatrix cd = cd_hamiltonian(h, t);
    for (const CVector& v : hermitian_eig(h(t)).vectors) CHECK(std::abs(v.dot(cd * v)) <= 1e-8);
  }
}

TEST_CASE("Landau-Zener closed form") {
  const double alpha = 5.0, omega = 0.8;
  const TimeDependentHamiltonian h = landau_zener_fixture(alpha, omega);
  CHECK(h(0.0)(0, 1) == cplx(0.4));
  CHECK(h(1.0)(0, 0) == cplx(2.5));
  for (double t : {-2.0, -0.3, 0.0, 0.1, 1.5}) {
    const CMatrix numeric = cd_hamiltonian(h, t);
    const CMatrix analytic = landau_zener_cd(alpha, omega, t);
    // Projector construction and closed form may differ by a global sign convention.
    const double same = numeric.max_abs_diff(analytic);
    const double flipped = numeric.max_abs_diff(analytic * cplx(-1.0));
    CHECK(std::min(same, flipped) <= 1e-6);
  }
  CHECK(std::abs(landau_zener_cd(alpha, omega, 0.0)(0, 1)) == doctest::Approx(alpha / (2.0 * omega)));
  CHECK_THROWS_AS(landau_zener_fixture(1.0, 0.0), Error);
}

TEST_CASE("degenerate spectrum is an error") {
  const TimeDependentHamiltonian h = [](double t) { return CMatrix::diagonal({t, t, 1.0}); };
  try {
    cd_hamiltonian(h, 0.0);
    FAIL("expected NearDegeneracy");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NearDegeneracy);
  }
}

TEST_CASE("transitionless driving holds every eigenstate") {
  // Fast sweep: alpha T^2 / omega = 200.
  const TimeDependentHamiltonian lz = landau_zener_fixture(10.0, 0.2);
  for (int n = 0; n < 2; ++n) CHECK(worst_tracking(lz, n, -1.0, 1.0, 4000) >= 1.0 - 1e-5);
  const PulseParams p;
  const TimeDependentHamiltonian stirap = [&](double t) { return h0(reference_drive(t, p, 16.0)); };
  for (int n = 0; n < 3; ++n) CHECK(worst_tracking(stirap, n, -0.5, 0.5, 2048) >= 1.0 - 1e-5);
}

TEST_CASE("Landau-Zener ground state fidelity under the correction") {
  const TimeDependentHamiltonian lz = landau_zener_fixture(40.0, 0.2);
  PropagationOptions opt;
  opt.check_convergence = false;
  const CVector g0 = hermitian_eig(lz(-1.0)).vectors[0];
  const Trajectory tr = propagate_schrodinger(transitionless(lz), g0, TimeGrid{-1.0, 1.0, 20000, 20000}, opt);
  CHECK(overlap(hermitian_eig(lz(1.0)).vectors[0], tr.final_vector()) >= 1.0 - 1e-6);
}

TEST_CASE("adiabatic phases") {
  const TimeDependentHamiltonian h = [](double) { return CMatrix::diagonal({-1.5, 0.5, 2.0}); };
  const std::vector<double> grid = {0.0, 0.25, 0.5, 1.0, 2.0};
  for (int n = 0; n < 3; ++n) {
    const AdiabaticPhase ph = adiabatic_phase(h, n, grid);
    CHECK(ph.dynamical == doctest::Approx(-std::vector<double>{-1.5, 0.5, 2.0}[n] * 2.0));
    CHECK(ph.geometric == 0.0);
    CHECK(ph.value == ph.dynamical);
  }
  const PulseParams p;
  const TimeDependentHamiltonian stirap = [&](double t) { return h0(reference_drive(t, p, 16.0)); };
  std::vector<double> ts;
  for (int k = 0; k <= 100; ++k) ts.push_back(-0.5 + k / 100.0);
  // Middle of the ascending spectrum is the dark state.
  for (double b : adiabatic_phase_track(stirap, 1, ts)) CHECK(std::abs(b) <= 1e-10);
}

TEST_CASE("adiabatic phase matches the propagated phase on a slow sweep") {
  const TimeDependentHamiltonian lz = landau_zener_fixture(1.0, 1.0);
  // Stop before the largest eigenvector component changes index, so the
  // sign convention of the solver stays continuous.
  const double t0 = -3.0, t1 = -0.2;
  PropagationOptions opt;
  opt.check_convergence = false;
  opt.record_states = true;
  const Trajectory tr =
      propagate_schrodinger(transitionless(lz), hermitian_eig(lz(t0)).vectors[0], TimeGrid{t0, t1, 2800, 70}, opt);
  const auto beta = adiabatic_phase_track(lz, 0, tr.times);
  // Real eigenvectors with a fixed sign convention make the geometric part vanish.
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const cplx a = hermitian_eig(lz(tr.times[k])).vectors[0].dot(tr.states[k]);
    const double diff = std::remainder(std::arg(a) - beta[k], 2.0 * kPi);
    CHECK(std::abs(diff) <= 1e-3);
  }
}

}  // TEST_SUITE
