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

#include "stashort/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stashort/errors.hpp"

namespace stashort {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::HermiticityViolation: return "HermiticityViolation";
    case ErrorCode::ConfigMissing: return "ConfigMissing";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::MaskAsymmetry: return "MaskAsymmetry";
    case ErrorCode::BasisJump: return "BasisJump";
    case ErrorCode::GammaUnderflow: return "GammaUnderflow";
    case ErrorCode::CotangentSingularity: return "CotangentSingularity";
    case ErrorCode::NearDegeneracy: return "NearDegeneracy";
    case ErrorCode::HamiltonianEvaluationError: return "HamiltonianEvaluationError";
    case ErrorCode::PositivityViolation: return "PositivityViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

bool is_config_error(ErrorCode code) {
  return code == ErrorCode::ConfigMissing || code == ErrorCode::ConfigInvalid;
}

namespace {

void check_dim(int n) {
  if (n < 0 || n > kMaxDim) throw Error(ErrorCode::DimensionMismatch, "dimension " + std::to_string(n) + " outside [0, 4]");
}

}  // namespace

// ---------------------------------------------------------------- CVector

CVector::CVector(int n) : n_(n) { check_dim(n); }

CVector::CVector(std::initializer_list<cplx> entries) : n_(static_cast<int>(entries.size())) {
  check_dim(n_);
  std::copy(entries.begin(), entries.end(), v_.begin());
}

CVector CVector::basis(int n, int k) {
  CVector v(n);
  v[k] = 1.0;
  return v;
}

double CVector::norm() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += std::norm(v_[i]);
  return std::sqrt(s);
}

cplx CVector::dot(const CVector& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "dot");
  cplx s = 0.0;
  for (int i = 0; i < n_; ++i) s += std::conj(v_[i]) * other.v_[i];
  return s;
}

CVector CVector::conj() const {
  CVector r(n_);
  for (int i = 0; i < n_; ++i) r.v_[i] = std::conj(v_[i]);
  return r;
}

bool CVector::all_finite() const {
  for (int i = 0; i < n_; ++i)
    if (!std::isfinite(v_[i].real()) || !std::isfinite(v_[i].imag())) return false;
  return true;
}

double CVector::max_abs_diff(const CVector& other) const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(v_[i] - other.v_[i]));
  return m;
}

CVector& CVector::operator+=(const CVector& o) {
  for (int i = 0; i < n_; ++i) v_[i] += o.v_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& o) {
  for (int i = 0; i < n_; ++i) v_[i] -= o.v_[i];
  return *this;
}

CVector& CVector::operator*=(cplx s) {
  for (int i = 0; i < n_; ++i) v_[i] *= s;
  return *this;
}

CVector operator+(CVector a, const CVector& b) { return a += b; }
CVector operator-(CVector a, const CVector& b) { return a -= b; }
CVector operator*(cplx s, CVector a) { return a *= s; }
CVector operator*(CVector a, cplx s) { return a *= s; }

CVector cross3(const CVector& a, const CVector& b) {
  return CVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// ---------------------------------------------------------------- CMatrix

CMatrix::CMatrix(int n) : n_(n) { check_dim(n); }

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : n_(static_cast<int>(rows.size())) {
  check_dim(n_);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    int c = 0;
    for (const auto& x : row) (*this)(r, c++) = x;
    ++r;
  }
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<double>& d) {
  CMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::outer(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "outer");
  CMatrix m(a.size());
  for (int r = 0; r < m.n_; ++r)
    for (int c = 0; c < m.n_; ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j)));
  return m;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "max_abs_diff");
  double m = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j) - other(i, j)));
  return m;
}

double CMatrix::norm() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

bool CMatrix::all_finite() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const cplx& x = (*this)(i, j);
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    }
  return true;
}

bool CMatrix::hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }

bool CMatrix::unitary(double tol) const { return (adjoint() * (*this)).max_abs_diff(identity(n_)) <= tol; }

CMatrix CMatrix::hermitian_part() const {
  CMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return r;
}

CVector CMatrix::apply(const CVector& x) const {
  if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "apply");
  CVector y(n_);
  for (int i = 0; i < n_; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) (*this)(i, j) += o(i, j);
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) (*this)(i, j) -= o(i, j);
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) (*this)(i, j) *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
CMatrix operator*(CMatrix a, cplx s) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  const int n = a.dim();
  if (b.dim() != n) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

CVector operator*(const CMatrix& a, const CVector& x) { return a.apply(x); }

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- eigensolver

void fix_phase(CVector& v) {
  double best = 0.0;
  for (int i = 0; i < v.size(); ++i) best = std::max(best, std::abs(v[i]));
  if (best == 0.0) return;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a >= best * (1.0 - 1e-10)) {
      const cplx phase = std::conj(v[i]) / a;
      v *= phase;
      v[i] = cplx(std::abs(v[i]), 0.0);
      return;
    }
  }
}

namespace {

void normalize(CVector& v) {
  const double n = v.norm();
  if (n > 0.0) v *= 1.0 / n;
}

void sort_and_fix(HermitianEig& e) {
  const int n = static_cast<int>(e.values.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return e.values[a] < e.values[b]; });
  HermitianEig out;
  for (int i : idx) {
    out.values.push_back(e.values[i]);
    out.vectors.push_back(e.vectors[i]);
  }
  for (auto& v : out.vectors) fix_phase(v);
  e = std::move(out);
}

HermitianEig jacobi_eig(const CMatrix& m) {
  const int n = m.dim();
  CMatrix a = m.hermitian_part();
  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(a.norm(), 1e-300);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-17 * scale) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        const cplx phase = std::conj(a(p, q)) / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U = D R with D = diag(.., 1 (p), .., phase (q), ..) and a real plane rotation R.
        CMatrix u = CMatrix::identity(n);
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * phase;
        u(q, q) = c * phase;
        a = u.adjoint() * a * u;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * u;
      }
    }
  }
  HermitianEig e;
  for (int i = 0; i < n; ++i) {
    e.values.push_back(a(i, i).real());
    CVector col(n);
    for (int r = 0; r < n; ++r) col[r] = v(r, i);
    normalize(col);
    e.vectors.push_back(col);
  }
  sort_and_fix(e);
  return e;
}

HermitianEig eig2(const CMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const cplx b = m(0, 1);
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double rad = std::hypot(half, std::abs(b));
  HermitianEig e;
  if (rad == 0.0) {
    e.values = {a, d};
    e.vectors = {CVector::basis(2, 0), CVector::basis(2, 1)};
    sort_and_fix(e);
    return e;
  }
  for (double lam : {mean - rad, mean + rad}) {
    // (a - lam) x + b y = 0  and  conj(b) x + (d - lam) y = 0
    CVector v1{b, lam - a};
    CVector v2{lam - d, std::conj(b)};
    CVector v = v1.norm() >= v2.norm() ? v1 : v2;
    normalize(v);
    e.values.push_back(lam);
    e.vectors.push_back(v);
  }
  sort_and_fix(e);
  return e;
}

// Eigenvalues of a 3x3 Hermitian matrix in ascending order.
std::array<double, 3> eigvals3(const CMatrix& m) {
  const double p1 = std::norm(m(0, 1)) + std::norm(m(0, 2)) + std::norm(m(1, 2));
  const double a00 = m(0, 0).real(), a11 = m(1, 1).real(), a22 = m(2, 2).real();
  const double q = (a00 + a11 + a22) / 3.0;
  const double p2 = (a00 - q) * (a00 - q) + (a11 - q) * (a11 - q) + (a22 - q) * (a22 - q) + 2.0 * p1;
  if (p2 == 0.0) return {q, q, q};
  const double p = std::sqrt(p2 / 6.0);
  CMatrix b = m.hermitian_part();
  for (int i = 0; i < 3; ++i) b(i, i) -= q;
  b *= 1.0 / p;
  const cplx det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) - b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                   b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
  const double r = std::clamp(0.5 * det.real(), -1.0, 1.0);
  const double angle = std::acos(r) / 3.0;
  const double hi = q + 2.0 * p * std::cos(angle);
  const double lo = q + 2.0 * p * std::cos(angle + 2.0 * M_PI / 3.0);
  const double mid = 3.0 * q - hi - lo;
  std::array<double, 3> out{lo, mid, hi};
  std::sort(out.begin(), out.end());
  return out;
}

// Null vector of (M - lam I) from the best-conditioned pair of rows; returns
// a zero vector when every pair is (near) parallel, i.e. lam is degenerate.
CVector null_vector3(const CMatrix& m, double lam, double scale) {
  CMatrix s = m;
  for (int i = 0; i < 3; ++i) s(i, i) -= lam;
  CVector rows[3] = {CVector{s(0, 0), s(0, 1), s(0, 2)}, CVector{s(1, 0), s(1, 1), s(1, 2)},
                     CVector{s(2, 0), s(2, 1), s(2, 2)}};
  CVector best(3);
  double best_norm = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      CVector c = cross3(rows[i], rows[j]);
      const double n = c.norm();
      if (n > best_norm) {
        best_norm = n;
        best = c;
      }
    }
  if (best_norm <= 1e-10 * scale * scale) return CVector(3);
  normalize(best);
  return best;
}

// Any unit vector orthogonal to u.
CVector orthogonal_to(const CVector& u) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(u[i]) < std::abs(u[k])) k = i;
  CVector e = CVector::basis(3, k);
  CVector w = e - u.dot(e) * u;
  normalize(w);
  return w;
}

HermitianEig eig3(const CMatrix& m) {
  const auto vals = eigvals3(m);
  const double scale = std::max({m.max_abs(), std::abs(vals[0]), std::abs(vals[2]), 1e-300});
  HermitianEig e;
  e.values = {vals[0], vals[1], vals[2]};
  if (vals[2] - vals[0] <= 1e-14 * scale) {
    e.vectors = {CVector::basis(3, 0), CVector::basis(3, 1), CVector::basis(3, 2)};
    return e;
  }
  CVector lo = null_vector3(m, vals[0], scale);
  CVector hi = null_vector3(m, vals[2], scale);
  CVector mid(3);
  if (lo.norm() == 0.0 && hi.norm() == 0.0) return jacobi_eig(m);
  if (lo.norm() == 0.0) {
    // lower pair degenerate
    lo = orthogonal_to(hi);
    mid = cross3(hi, lo).conj();
  } else if (hi.norm() == 0.0) {
    hi = orthogonal_to(lo);
    mid = cross3(lo, hi).conj();
  } else {
    mid = cross3(lo, hi).conj();
  }
  normalize(mid);
  e.vectors = {lo, mid, hi};
  sort_and_fix(e);
  return e;
}

double residual(const CMatrix& m, const HermitianEig& e) {
  double worst = 0.0;
  const int n = m.dim();
  for (int i = 0; i < n; ++i) {
    CVector r = m * e.vectors[i] - e.values[i] * e.vectors[i];
    worst = std::max(worst, r.norm());
    for (int j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(e.vectors[i].dot(e.vectors[j])) * m.max_abs());
  }
  return worst;
}

}  // namespace

HermitianEig hermitian_eig(const CMatrix& m, double tol) {
  const int n = m.dim();
  const double scale = std::max(1.0, m.max_abs());
  if (!m.all_finite()) throw Error(ErrorCode::HermiticityViolation, "non-finite matrix entries");
  if (!m.hermitian(tol * scale)) throw Error(ErrorCode::HermiticityViolation, "matrix is not Hermitian within tolerance");
  HermitianEig e;
  if (n == 0) return e;
  if (n == 1) {
    e.values = {m(0, 0).real()};
    e.vectors = {CVector{1.0}};
    return e;
  }
  const CMatrix h = m.hermitian_part();
  if (n == 2) {
    e = eig2(h);
  } else if (n == 3) {
    e = eig3(h);
  } else {
    return jacobi_eig(h);
  }
  if (residual(h, e) > 1e-12 * std::max(h.max_abs(), 1e-300)) return jacobi_eig(h);
  return e;
}

double min_eigenvalue(const CMatrix& m) {
  if (m.dim() == 3) return eigvals3(m.hermitian_part())[0];
  return hermitian_eig(m.hermitian_part(), 1e-9).values.front();
}

// ---------------------------------------------------------------- RNG

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream RandomStream::derive(std::uint64_t master_seed, std::uint64_t index) {
  return RandomStream(splitmix64(master_seed ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t out = splitmix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
  ++counter_;
  return out;
}

double RandomStream::uniform() {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

double RandomStream::uniform(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace stashort
