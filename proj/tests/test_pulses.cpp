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
#include "stashort/errors.hpp"
#include "stashort/metrics.hpp"
#include "stashort/pulses.hpp"
#include "test_util.hpp"

using namespace stashort;
using stashort::testing::kPi;

TEST_SUITE("pulses") {

TEST_CASE("mixing angle midpoint, asymptotes and window edge") {
  PulseParams p;
  CHECK(theta(0.0, p) == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  CHECK(theta(50.0, p) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(theta(-50.0, p) < 1e-100);
  p.tau = 0.12;
  CHECK(theta(-0.5, p) == doctest::Approx((kPi / 2.0) / (1.0 + std::exp(25.0 / 6.0))).epsilon(1e-13));
  CHECK(theta(-0.5, p) == doctest::Approx(0.0240).epsilon(2e-3));
}

TEST_CASE("mixing angle is monotone and antisymmetric about pi/4") {
  const PulseParams p;
  double prev = -1.0;
  for (int k = 0; k <= 200; ++k) {
    const double t = -0.5 + k / 200.0;
    CHECK(theta(t, p) > prev);
    prev = theta(t, p);
    CHECK(theta(t, p) + theta(-t, p) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  }
}

TEST_CASE("mixing angle rate: peak, symmetry, finite differences") {
  const PulseParams p;
  CHECK(theta_dot(0.0, p) == doctest::Approx(kPi / (8.0 * p.tau)).epsilon(1e-14));
  const double h = 1e-5;
  for (int k = 0; k < 100; ++k) {
    const double t = -0.5 + (k + 0.5) / 100.0;
    CHECK(theta_dot(t, p) > 0.0);
    CHECK(theta_dot(t, p) == doctest::Approx(theta_dot(-t, p)).epsilon(1e-13));
    const double fd = (theta(t + h, p) - theta(t - h, p)) / (2.0 * h);
    CHECK(std::abs(fd - theta_dot(t, p)) <= 1e-8 * theta_dot(t, p));
  }
}

TEST_CASE("admixture angle and its rate") {
  const PulseParams p;
  CHECK(gamma(0.0, p) == doctest::Approx(kPi * 0.1).epsilon(1e-15));
  CHECK(gamma_dot(0.0, p) == 0.0);
  CHECK(gamma(0.5, p) == doctest::Approx(0.1 * kPi * std::exp(-25.0 / 9.0)).epsilon(1e-14));
  CHECK(gamma(0.5, p) == doctest::Approx(0.01954).epsilon(1e-3));
  const double h = 1e-5;
  for (int k = 0; k < 100; ++k) {
    const double t = -0.5 + (k + 0.5) / 100.0;
    const double fd = (gamma(t + h, p) - gamma(t - h, p)) / (2.0 * h);
    CHECK(std::abs(fd - gamma_dot(t, p)) <= 1e-8 * std::max(std::abs(gamma_dot(t, p)), 1e-3));
  }
}

TEST_CASE("boundary residuals stay small over admissible shapes") {
  for (double tau : linspace(0.01, 0.12, 12))
    for (double tc : linspace(0.21, 0.3, 10))
      for (double g0 : linspace(0.01, 0.12, 12)) {
        PulseParams p;
        p.tau = tau;
        p.tau_c = tc;
        p.gamma0 = g0;
        CHECK(theta(-0.5, p) <= 0.03);
        // Gaussian tail at the window edge relative to the peak.
        CHECK(gamma(-0.5, p) <= 0.07 * gamma(0.0, p));
        CHECK(gamma(0.5, p) <= 0.07 * gamma(0.0, p));
      }
}

TEST_CASE("parameter bounds") {
  PulseParams p;
  CHECK_NOTHROW(p.validate());
  auto rejects = [](PulseParams q) {
    try {
      q.validate();
    } catch (const Error& e) {
      return e.code() == ErrorCode::ConfigInvalid;
    }
    return false;
  };
  PulseParams q = p;
  q.tau = 0.0;
  CHECK(rejects(q));
  q.tau = 0.121;
  CHECK(rejects(q));
  q.tau = 0.12;
  CHECK_FALSE(rejects(q));
  q = p;
  q.tau_c = 0.2;
  CHECK(rejects(q));
  q.tau_c = 0.3;
  CHECK_FALSE(rejects(q));
  q.tau_c = 0.31;
  CHECK(rejects(q));
  q = p;
  q.gamma0 = 0.5;
  CHECK(rejects(q));
  q.gamma0 = 0.0;
  CHECK(rejects(q));
  q = p;
  q.phi = kPi / 4.0;
  CHECK_FALSE(rejects(q));
  q.phi = kPi / 4.0 + 1e-9;
  CHECK(rejects(q));
  q.phi = 0.0;
  CHECK(rejects(q));
}

TEST_CASE("super-gaussian envelope") {
  PulseParams p;
  CHECK_THROWS_AS(omega0_envelope(0.0, p), Error);
  try {
    omega0_envelope(0.0, p);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigMissing);
  }
  p.chi = 16.0;
  p.T0 = 0.5;
  p.n = 2;
  CHECK(omega0_envelope(0.0, p) == 16.0);
  p.T0 = 50.0;
  p.n = 4;
  CHECK(omega0_envelope(0.4, p) == doctest::Approx(16.0).epsilon(1e-12));
  std::vector<double> t, w;
  for (int k = 0; k <= 4096; ++k) {
    t.push_back(-0.5 + k / 4096.0);
    w.push_back(omega0_envelope(t.back(), p));
  }
  const PulseArea a = pulse_area(t, w);
  CHECK(a.radians == doctest::Approx(16.0).epsilon(1e-10));
  CHECK(a.over_pi == doctest::Approx(5.09).epsilon(1e-3));
}

}  // TEST_SUITE
