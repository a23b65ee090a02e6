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

#include "stashort/framework.hpp"

#include <algorithm>
#include <cmath>

#include "stashort/errors.hpp"

namespace stashort {

CoefficientMask CoefficientMask::uniform(int dim, double lambda_value, double kappa_value) {
  CoefficientMask m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      m.lambda_at(r, c) = lambda_value;
      m.kappa_at(r, c) = kappa_value;
    }
  return m;
}

void CoefficientMask::set_lambda(int r, int c, double v) { lambda_at(r, c) = lambda_at(c, r) = v; }

void CoefficientMask::set_kappa(int r, int c, double v) { kappa_at(r, c) = kappa_at(c, r) = v; }

bool CoefficientMask::symmetric() const {
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (lambda_at(r, c) != lambda_at(c, r) || kappa_at(r, c) != kappa_at(c, r)) return false;
  return true;
}

CMatrix intermediate_h(const CMatrix& h0, const CMatrix& hcd, const CoefficientMask& mask) {
  if (h0.dim() != hcd.dim() || h0.dim() != mask.n) throw Error(ErrorCode::DimensionMismatch, "intermediate_h");
  if (!mask.symmetric()) throw Error(ErrorCode::MaskAsymmetry, "lambda and kappa must be symmetric");
  CMatrix out(h0.dim());
  for (int r = 0; r < h0.dim(); ++r)
    for (int c = 0; c < h0.dim(); ++c) out(r, c) = mask.lambda_at(r, c) * h0(r, c) - mask.kappa_at(r, c) * hcd(r, c);
  return out;
}

namespace {

CVector aligned(const CVector& ref, const CVector& v, Gauge gauge) {
  const cplx overlap = ref.dot(v);
  if (std::abs(overlap) < 0.9) throw Error(ErrorCode::BasisJump, "basis vector changed discontinuously");
  if (gauge == Gauge::AsGiven) return v;
  return v * (std::conj(overlap) / std::abs(overlap));
}

CMatrix assemble(const BasisSample& mid, const BasisSample& plus, const BasisSample& minus, double h, Gauge gauge) {
  const int n = static_cast<int>(mid.states.size());
  const int dim = mid.states.front().size();
  CMatrix out(dim);
  for (int k = 0; k < n; ++k) {
    const CVector& v = mid.states[k];
    const CVector vp = aligned(v, plus.states[k], gauge);
    const CVector vm = aligned(v, minus.states[k], gauge);
    const CVector dv = (vp - vm) * cplx(1.0 / (2.0 * h));
    out += mid.energies[k] * CMatrix::outer(v, v);
    out += kI * CMatrix::outer(dv, v);
  }
  return out;
}

void check_sample(const BasisSample& s) {
  if (s.states.empty() || s.states.size() != s.energies.size())
    throw Error(ErrorCode::DimensionMismatch, "basis sample needs one energy per state");
}

}  // namespace

TransitionlessEstimate numeric_transitionless_checked(const MovingBasis& basis, double t, double h, Gauge gauge) {
  const BasisSample mid = basis(t);
  const BasisSample p1 = basis(t + h), m1 = basis(t - h);
  const BasisSample p2 = basis(t + 2.0 * h), m2 = basis(t - 2.0 * h);
  for (const auto* s : {&mid, &p1, &m1, &p2, &m2}) check_sample(*s);
  TransitionlessEstimate est;
  est.h = assemble(mid, p1, m1, h, gauge);
  const CMatrix coarse = assemble(mid, p2, m2, 2.0 * h, gauge);
  est.error_estimate = est.h.max_abs_diff(coarse);
  est.flagged = est.error_estimate > 1e-5;
  return est;
}

CMatrix numeric_transitionless(const MovingBasis& basis, double t, double h, Gauge gauge) {
  return numeric_transitionless_checked(basis, t, h, gauge).h;
}

CMatrix f_matrix(const CMatrix& htilde) { return htilde; }

double boundary_overlap(const MovingBasis& b, const MovingBasis& ref, double t) {
  const BasisSample x = b(t), y = ref(t);
  if (x.states.size() != y.states.size()) throw Error(ErrorCode::DimensionMismatch, "boundary_check");
  double worst = 1.0;
  for (std::size_t n = 0; n < x.states.size(); ++n) worst = std::min(worst, std::abs(y.states[n].dot(x.states[n])));
  return worst;
}

bool boundary_check(const MovingBasis& b, const MovingBasis& ref, double t, double tol) {
  return boundary_overlap(b, ref, t) >= 1.0 - tol;
}

}  // namespace stashort
