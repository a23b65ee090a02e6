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

// Generic machinery for building a transitionless Hamiltonian from a moving
// orthonormal basis, and the elementwise correction of H0 / H_cd that produces
// an intermediate Hamiltonian.

#include <array>
#include <functional>
#include <vector>

#include "stashort/numkit.hpp"

namespace stashort {

// Elementwise multipliers: out(l,r) = lambda(l,r) * H0(l,r) - kappa(l,r) * Hcd(l,r).
struct CoefficientMask {
  int n = 0;
  std::array<double, kMaxDim * kMaxDim> lambda{};
  std::array<double, kMaxDim * kMaxDim> kappa{};

  explicit CoefficientMask(int dim = 0) : n(dim) {}
  static CoefficientMask uniform(int dim, double lambda_value, double kappa_value);

  double& lambda_at(int r, int c) { return lambda[r * kMaxDim + c]; }
  double lambda_at(int r, int c) const { return lambda[r * kMaxDim + c]; }
  double& kappa_at(int r, int c) { return kappa[r * kMaxDim + c]; }
  double kappa_at(int r, int c) const { return kappa[r * kMaxDim + c]; }

  // Sets (r,c) and (c,r) together.
  void set_lambda(int r, int c, double v);
  void set_kappa(int r, int c, double v);

  bool symmetric() const;
};

// Throws Error(MaskAsymmetry) for a non-symmetric mask, DimensionMismatch on size.
CMatrix intermediate_h(const CMatrix& h0, const CMatrix& hcd, const CoefficientMask& mask);

struct BasisSample {
  std::vector<CVector> states;
  std::vector<double> energies;
};

// t -> orthonormal basis with its energies. Must be deterministic and stateless.
using MovingBasis = std::function<BasisSample(double)>;

enum class Gauge {
  // Differentiate the vectors as the basis supplies them.
  AsGiven,
  // Align the phase of |n(t +- h)> to <n(t)|n(t +- h)> > 0 before differencing.
  ParallelTransport,
};

struct TransitionlessEstimate {
  CMatrix h;
  double error_estimate = 0.0;  // max |H(h) - H(2h)|
  bool flagged = false;         // error_estimate > 1e-5
};

// sum_n E_n |n><n| + i sum_n |dn/dt><n| with central differences of step h.
// Throws Error(BasisJump) if |<n(t)|n(t +- h)>| < 0.9 for any n.
TransitionlessEstimate numeric_transitionless_checked(const MovingBasis& basis, double t, double h = 1e-6,
                                                      Gauge gauge = Gauge::AsGiven);
CMatrix numeric_transitionless(const MovingBasis& basis, double t, double h = 1e-6, Gauge gauge = Gauge::AsGiven);

// Matrix elements F(l,r) = <mu_l|H|mu_r> in the bare basis; a named view so the
// zero conditions on undesired couplings read as F(alpha,beta) == 0.
CMatrix f_matrix(const CMatrix& htilde);

// True iff |<ref_n(t)|b_n(t)>| >= 1 - tol for every n.
bool boundary_check(const MovingBasis& b, const MovingBasis& ref, double t, double tol);

// Smallest |<ref_n(t)|b_n(t)>| over n.
double boundary_overlap(const MovingBasis& b, const MovingBasis& ref, double t);

}  // namespace stashort
