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
#include "stashort/framework.hpp"
#include "stashort/lambda3.hpp"
#include "stashort/shortcut.hpp"
#include "test_util.hpp"

using namespace stashort;
using stashort::testing::kPi;
using stashort::testing::overlap;
using stashort::testing::random_params;

namespace {

ShortcutFrame random_frame(RandomStream& rng) {
  const double th = 0.02 + 1.5 * 0.5 * (rng.uniform() + 1.0);
  const double g = 0.01 + 1.2 * 0.5 * (rng.uniform() + 1.0);
  const double phi = 0.05 + (kPi / 4.0 - 0.05) * 0.5 * (rng.uniform() + 1.0);
  return make_frame(th, 1.0 + 5.0 * 0.5 * (rng.uniform() + 1.0), g, 3.0 * rng.uniform(), phi);
}

}  // namespace

TEST_SUITE("shortcut") {

TEST_CASE("frame at the pulse centre") {
  const PulseParams p;
  const ShortcutFrame f = frame_at(0.0, p);
  const double expect = kPi / (4.0 * p.tau * std::sin(0.1 * kPi) * std::sin(2.0 * kPi / 5.0));
  CHECK(f.xi_tilde == doctest::Approx(expect).epsilon(1e-14));
  CHECK(f.xi_tilde == doctest::Approx(23.24).epsilon(1e-3));
}

TEST_CASE("closure removes the 1-3 coupling for every frame") {
  RandomStream rng(41);
  for (int k = 0; k < 200; ++k) {
    const ShortcutFrame f = random_frame(rng);
    CHECK(std::abs(f.theta_dot - f.xi_tilde * std::sin(f.gamma) * std::sin(2.0 * f.phi) / 2.0) <=
          1e-13 * f.theta_dot);
    const CMatrix h = h_tilde(modified_drive(f));
    CHECK(h(0, 2) == cplx(0.0));
    CHECK(h(2, 0) == cplx(0.0));
    CHECK(h(0, 0) == cplx(0.0));
    CHECK(h(2, 2) == cplx(0.0));
    CHECK(h.hermitian(0.0));
  }
}

TEST_CASE("gamma underflow and divergence near it") {
  PulseParams p;
  p.gamma0 = 1e-14;
  try {
    frame_at(0.0, p);
    FAIL("expected GammaUnderflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GammaUnderflow);
  }
  p.gamma0 = 1e-9;
  CHECK(frame_at(0.0, p).xi_tilde > 1e8);
}

TEST_CASE("coefficient products") {
  RandomStream rng(43);
  for (int k = 0; k < 50; ++k) {
    const ShortcutFrame f = random_frame(rng);
    const LambdaKappaProducts c = lambda_kappa_coeffs(f);
    CHECK(c.kappa_a_thetadot == doctest::Approx(f.theta_dot).epsilon(1e-13));
    CHECK(c.lambda_p_xi0 == c.lambda_s_xi0);
  }
  const ShortcutFrame tiny = make_frame(0.3, 1.0, 1e-9, 0.0, kPi / 5.0);
  const LambdaKappaProducts c = lambda_kappa_coeffs(tiny);
  CHECK(c.lambda_p_xi0 == doctest::Approx(tiny.xi_tilde).epsilon(1e-12));
  CHECK(std::abs(c.kappa_p_phidot) <= 1e-8 * tiny.xi_tilde);
  CHECK(std::abs(c.kappa_s_phidot) <= 1e-8 * tiny.xi_tilde);
  for (double th : {0.0, kPi / 2.0}) {
    try {
      lambda_kappa_coeffs(make_frame(th, 1.0, 0.2, 0.0, kPi / 5.0));
      FAIL("expected CotangentSingularity");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CotangentSingularity);
    }
    // The entry-level assembly stays finite there.
    CHECK(intermediate_h0(make_frame(th, 1.0, 0.2, 0.0, kPi / 5.0)).all_finite());
  }
}

TEST_CASE("closed-form basis diagonalizes the intermediate Hamiltonian") {
  RandomStream rng(47);
  for (int k = 0; k < 100; ++k) {
    const ShortcutFrame f = random_frame(rng);
    const BasisSample b = intermediate_eigvecs(f);
    const CMatrix h = intermediate_h0(f);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j)
        CHECK(std::abs(b.states[i].dot(b.states[j]) - cplx(i == j ? 1.0 : 0.0)) <= 1e-12);
      const CVector r = h * b.states[i] - b.states[i] * cplx(b.energies[i]);
      CHECK(r.norm() <= 1e-12 * std::max(1.0, f.xi_tilde));
    }
    CHECK(std::norm(b.states[0][1]) == doctest::Approx(std::pow(std::sin(f.gamma), 2)).epsilon(1e-13));
  }
}

TEST_CASE("closed-form basis against the numeric eigensolver") {
  RandomStream rng(53);
  for (int k = 0; k < 20; ++k) {
    const ShortcutFrame f = random_frame(rng);
    const BasisSample b = intermediate_eigvecs(f);
    const HermitianEig e = hermitian_eig(intermediate_h0(f));
    for (int i = 0; i < 3; ++i) {
      double best = 0.0;
      for (int j = 0; j < 3; ++j) best = std::max(best, overlap(b.states[i], e.vectors[j]));
      CHECK(best >= 1.0 - 1e-8);
    }
  }
}

TEST_CASE("vanishing admixture recovers the bare spectrum") {
  const ShortcutFrame f = make_frame(0.4, 1.0, 0.0, 0.0, kPi / 5.0);
  const BasisSample b = intermediate_eigvecs(f);
  const LambdaSpectrum s = spectrum_h0(MixingAngles{0.4, kPi / 5.0, 1.0});
  for (int i = 0; i < 3; ++i) CHECK(b.states[i].max_abs_diff(s.states[i]) <= 1e-15);
}

TEST_CASE("modified drive identities") {
  RandomStream rng(59);
  for (int k = 0; k < 100; ++k) {
    const ModifiedDrive d = modified_drive(random_frame(rng));
    const double lhs = d.omega_p_t * d.omega_p_t + d.omega_s_t * d.omega_s_t;
    CHECK(std::abs(lhs - d.omega0_t * d.omega0_t) <= 1e-12 * d.omega0_t * d.omega0_t);
    CHECK(d.omega_p_t == doctest::Approx(d.omega0_t * std::sin(d.theta_t)).epsilon(1e-12));
    CHECK(d.omega_s_t == doctest::Approx(d.omega0_t * std::cos(d.theta_t)).epsilon(1e-12));
  }
  // Static admixture near zero: pump reduces to xi sin(theta) sin(2 phi) with no phase.
  const ShortcutFrame f = make_frame(0.5, 1.0, 1e-8, 0.0, kPi / 5.0);
  const ModifiedDrive d = modified_drive(f);
  CHECK(d.omega_p_t == doctest::Approx(f.xi_tilde * std::sin(0.5) * std::sin(2.0 * kPi / 5.0)).epsilon(1e-12));
  CHECK(std::abs(d.phase_p) <= 1e-7);
  CHECK_FALSE(d.phase_p_undefined);
}

TEST_CASE("undefined phases are flagged") {
  // A frozen frame (no angle rates) leaves no field at all.
  const ModifiedDrive d = modified_drive(make_frame(0.3, 0.0, 0.2, 0.0, kPi / 5.0));
  CHECK(d.phase_p_undefined);
  CHECK(d.phase_s_undefined);
  CHECK(d.phase_p == 0.0);
  CHECK(d.phase_s == 0.0);
  CHECK_FALSE(modified_drive(make_frame(0.3, 1.0, 0.2, 0.0, kPi / 5.0)).phase_p_undefined);
}

TEST_CASE("closed form matches the numeric transitionless construction") {
  const PulseParams p;
  const MovingBasis b = intermediate_basis(p);
  const TimeDependentHamiltonian h = shortcut_hamiltonian(p);
  double diag_gap = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double t = -0.5 + (k + 0.5) / 50.0;
    const CMatrix closed = h(t);
    const CMatrix numeric = numeric_transitionless(b, t);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        if (r == c) {
          diag_gap = std::max(diag_gap, std::abs(closed(r, c) - numeric(r, c)));
          continue;
        }
        CHECK(std::abs(closed(r, c) - numeric(r, c)) <= 1e-6 * closed.norm());
      }
    CHECK(std::abs(numeric(0, 2)) <= 1e-6 * closed.norm());
  }
  MESSAGE("largest diagonal difference (gauge term): " << diag_gap);
}

TEST_CASE("small-detuning expansion") {
  PulseParams p;
  p.phi = kPi / 4.0;
  for (double t : {-0.3, -0.05, 0.0, 0.2}) {
    const ShortcutFrame f = frame_at(t, p);
    const SmallDetuningApprox a = small_detuning_approx(f);
    const ModifiedDrive d = modified_drive(f);
    CHECK(a.omega0_approx == doctest::Approx(d.omega0_t).epsilon(1e-10));
    CHECK(a.theta_approx == doctest::Approx(d.theta_t).epsilon(1e-10));
  }
  auto worst_error = [](double phi) {
    PulseParams q;
    q.phi = phi;
    double worst = 0.0;
    for (int k = 0; k <= 256; ++k) {
      const ShortcutFrame f = frame_at(-0.5 + k / 256.0, q);
      worst = std::max(worst, std::abs(small_detuning_approx(f).omega0_approx / modified_drive(f).omega0_t - 1.0));
    }
    return worst;
  };
  CHECK(worst_error(kPi / 4.0 - 0.01) < 0.01);
  const double e5 = worst_error(kPi / 5.0);
  MESSAGE("relative amplitude error of the expansion at phi = pi/5: " << e5);
  double prev = 0.0;
  for (double off : {0.0, 0.02, 0.05, 0.1, kPi / 4.0 - kPi / 5.0}) {
    const double e = worst_error(kPi / 4.0 - off);
    CHECK(e >= prev);
    prev = e;
  }
}

TEST_CASE("adiabatic-reference admixture angle") {
  CHECK(gamma_adiabatic_reference(0.0, 3.0) == 0.0);
  CHECK(gamma_adiabatic_reference(1.0, 1.0) == doctest::Approx(kPi / 4.0));
}

TEST_CASE("exact tracking of the shortcut dark path") {
  RandomStream rng(2026);
  for (int trial = 0; trial < 4; ++trial) {
    const PulseParams p = trial == 0 ? PulseParams{} : random_params(rng);
    const TimeDependentHamiltonian h = shortcut_hamiltonian(p);
    const int steps = recommended_steps(h, p.t_initial(), p.t_final());
    PropagationOptions opt;
    opt.check_convergence = false;
    opt.record_states = true;
    const Trajectory tr = propagate_schrodinger(h, intermediate_eigvecs(frame_at(p.t_initial(), p)).states[0],
                                                TimeGrid{p.t_initial(), p.t_final(), steps, 1}, opt);
    double worst = 1.0;
    for (std::size_t k = 0; k < tr.times.size(); ++k)
      worst = std::min(worst, overlap(intermediate_eigvecs(frame_at(tr.times[k], p)).states[0], tr.states[k]));
    CHECK(worst >= 1.0 - 1e-5);
  }
}

TEST_CASE("sampled drive covers the window") {
  const DriveSamples s = sample_drive(PulseParams{}, 64);
  CHECK(s.t.size() == 65);
  CHECK(s.t.front() == -0.5);
  CHECK(s.t.back() == doctest::Approx(0.5).epsilon(1e-15));
}

}  // TEST_SUITE
