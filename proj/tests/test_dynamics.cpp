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
#include <limits>

#include "doctest.h"
#include "stashort/dynamics.hpp"
#include "stashort/errors.hpp"
#include "stashort/shortcut.hpp"
#include "test_util.hpp"

using namespace stashort;

namespace {

PropagationOptions quick() {
  PropagationOptions o;
  o.check_convergence = false;
  return o;
}

CMatrix pure(const CVector& v) { return CMatrix::outer(v, v); }

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("zero Hamiltonian leaves the state alone") {
  const TimeDependentHamiltonian h = [](double) { return CMatrix::zero(3); };
  const CVector psi0{0.6, cplx(0.0, 0.8), 0.0};
  const Trajectory tr = propagate_schrodinger(h, psi0, TimeGrid{0.0, 1.0, 100, 10});
  CHECK(tr.final_vector().max_abs_diff(psi0) == 0.0);
  CHECK(tr.times.size() == 11);
  CHECK(tr.norm_drift == 0.0);
  CHECK(tr.convergence_checked);
  CHECK_FALSE(tr.convergence_warning);
}

TEST_CASE("Rabi oscillation") {
  const double omega = 7.0;
  const TimeDependentHamiltonian h = [omega](double) { return CMatrix{{0.0, 0.5 * omega}, {0.5 * omega, 0.0}}; };
  const Trajectory tr = propagate_schrodinger(h, CVector::basis(2, 0), TimeGrid{0.0, 2.0, 4000, 8}, quick());
  for (std::size_t k = 0; k < tr.times.size(); ++k)
    CHECK(std::abs(tr.populations[k][1] - std::pow(std::sin(omega * tr.times[k] / 2.0), 2)) <= 1e-8);
}

TEST_CASE("recording includes both ends") {
  const TimeDependentHamiltonian h = [](double) { return CMatrix::zero(2); };
  const Trajectory tr = propagate_schrodinger(h, CVector::basis(2, 0), TimeGrid{-0.5, 0.5, 100, 8}, quick());
  CHECK(tr.times.front() == -0.5);
  CHECK(tr.times.back() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(tr.times.size() == 14);
}

TEST_CASE("shortcut transfer at default resolution") {
  const PulseParams p;
  const Trajectory tr =
      propagate_schrodinger(shortcut_hamiltonian(p), CVector::basis(3, 0), TimeGrid{-0.5, 0.5, 4096, 8});
  CHECK(tr.final_population(2) >= 0.99);
  CHECK(tr.final_population(2) <= 1.0);
  CHECK(tr.norm_drift <= 1e-7);
  CHECK_FALSE(tr.convergence_warning);
  for (const auto& pop : tr.populations) {
    double s = 0.0;
    for (double x : pop) {
      CHECK(x >= -1e-9);
      CHECK(x <= 1.0 + 1e-9);
      s += x;
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("halving the step approaches the quarter-step reference") {
  const PulseParams p;
  const auto h = shortcut_hamiltonian(p);
  auto p3 = [&](int steps) {
    return propagate_schrodinger(h, CVector::basis(3, 0), TimeGrid{-0.5, 0.5, steps, steps}, quick())
        .final_population(2);
  };
  // Coarse enough that the truncation error dominates rounding.
  const double ref = p3(1024);
  CHECK(std::abs(p3(128) - ref) > std::abs(p3(256) - ref));
}

TEST_CASE("coarse grids raise a convergence warning") {
  const PulseParams p;
  const Trajectory tr =
      propagate_schrodinger(shortcut_hamiltonian(p), CVector::basis(3, 0), TimeGrid{-0.5, 0.5, 64, 8});
  CHECK(tr.convergence_warning);
  CHECK(tr.convergence_delta >= 1e-7);
}

TEST_CASE("non-finite Hamiltonian is reported") {
  const TimeDependentHamiltonian h = [](double t) {
    CMatrix m(2);
    if (t > 0.5) m(0, 0) = std::numeric_limits<double>::quiet_NaN();
    return m;
  };
  try {
    propagate_schrodinger(h, CVector::basis(2, 0), TimeGrid{0.0, 1.0, 10, 1});
    FAIL("expected HamiltonianEvaluationError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HamiltonianEvaluationError);
  }
}

TEST_CASE("bad grids and rates are configuration errors") {
  const TimeDependentHamiltonian h = [](double) { return CMatrix::zero(3); };
  CHECK_THROWS_AS(propagate_schrodinger(h, CVector::basis(3, 0), TimeGrid{0.0, 1.0, 0, 1}), Error);
  CHECK_THROWS_AS(propagate_lindblad(h, pure(CVector::basis(3, 0)), LindbladParams{-1.0, 0.0}, TimeGrid{}), Error);
  CHECK_THROWS_AS(propagate_lindblad(h, pure(CVector::basis(2, 0)), LindbladParams{}, TimeGrid{}), Error);
}

TEST_CASE("closed-system Lindblad equals Schrodinger") {
  const PulseParams p;
  const auto h = shortcut_hamiltonian(p);
  const TimeGrid g{-0.5, 0.5, 4096, 8};
  const Trajectory a = propagate_schrodinger(h, CVector::basis(3, 0), g, quick());
  const Trajectory b = propagate_lindblad(h, pure(CVector::basis(3, 0)), LindbladParams{}, g, quick());
  REQUIRE(a.populations.size() == b.populations.size());
  for (std::size_t k = 0; k < a.populations.size(); ++k)
    for (int i = 0; i < 3; ++i) CHECK(std::abs(a.populations[k][i] - b.populations[k][i]) <= 1e-7);
}

TEST_CASE("spontaneous decay of the excited state") {
  const TimeDependentHamiltonian h = [](double) { return CMatrix::zero(3); };
  const LindbladParams lp{1.3, 0.7};
  const Trajectory tr = propagate_lindblad(h, pure(CVector::basis(3, 1)), lp, TimeGrid{0.0, 2.0, 2000, 10});
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const double p2 = std::exp(-2.0 * tr.times[k]);
    CHECK(std::abs(tr.populations[k][1] - p2) <= 1e-6);
    // Branching follows the rates.
    CHECK(std::abs(tr.populations[k][0] - 0.65 * (1.0 - p2)) <= 1e-6);
  }
  CHECK(tr.norm_drift <= 1e-12);
  CHECK(tr.min_eigenvalue >= -1e-8);
}

TEST_CASE("Lindblad invariants with strong decay along the shortcut") {
  const PulseParams p;
  const auto h = shortcut_hamiltonian(p);
  const Trajectory tr =
      propagate_lindblad(h, pure(CVector::basis(3, 0)), LindbladParams{10.0, 10.0}, TimeGrid{-0.5, 0.5, 4096, 8});
  CHECK(tr.norm_drift <= 1e-6);
  CHECK(tr.min_eigenvalue >= -1e-8);
  CHECK(tr.final_density().hermitian(1e-10));
  CHECK_FALSE(tr.convergence_warning);
}

TEST_CASE("positivity violation on a hopeless step") {
  const TimeDependentHamiltonian h = [](double) { return CMatrix::zero(3); };
  try {
    propagate_lindblad(h, pure(CVector::basis(3, 1)), LindbladParams{1000.0, 0.0}, TimeGrid{0.0, 1.0, 10, 1});
    FAIL("expected PositivityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PositivityViolation);
  }
}

TEST_CASE("recommended steps respect the phase budget") {
  const TimeDependentHamiltonian slow = [](double) { return CMatrix::diagonal({1.0, -1.0}); };
  CHECK(recommended_steps(slow, 0.0, 1.0) == 4096);
  const TimeDependentHamiltonian fast = [](double) { return CMatrix::diagonal({1000.0, -1000.0}); };
  const int n = recommended_steps(fast, 0.0, 1.0);
  CHECK(n % 8 == 0);
  CHECK(std::sqrt(2.0) * 1000.0 / n <= 0.05);
}

}  // TEST_SUITE
