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

// Dense complex linear algebra for the small Hilbert spaces used here (N <= 4).
// Storage is inline, so vectors and matrices are cheap value types that can be
// copied freely inside integrator loops.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace stashort {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 4;
inline constexpr cplx kI{0.0, 1.0};

class CVector {
 public:
  CVector() = default;
  explicit CVector(int n);
  CVector(std::initializer_list<cplx> entries);

  static CVector basis(int n, int k);

  int size() const noexcept { return n_; }
  cplx& operator[](int i) { return v_[i]; }
  const cplx& operator[](int i) const { return v_[i]; }

  double norm() const;
  // Hermitian inner product <this|other>.
  cplx dot(const CVector& other) const;
  CVector conj() const;
  bool all_finite() const;
  double max_abs_diff(const CVector& other) const;

  CVector& operator+=(const CVector& o);
  CVector& operator-=(const CVector& o);
  CVector& operator*=(cplx s);

 private:
  int n_ = 0;
  std::array<cplx, kMaxDim> v_{};
};

CVector operator+(CVector a, const CVector& b);
CVector operator-(CVector a, const CVector& b);
CVector operator*(cplx s, CVector a);
CVector operator*(CVector a, cplx s);

// Bilinear (non-conjugating) cross product of two 3-vectors.
CVector cross3(const CVector& a, const CVector& b);

class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix zero(int n) { return CMatrix(n); }
  static CMatrix identity(int n);
  static CMatrix diagonal(const std::vector<double>& d);
  // |a><b|
  static CMatrix outer(const CVector& a, const CVector& b);

  int dim() const noexcept { return n_; }
  cplx& operator()(int r, int c) { return m_[r * kMaxDim + c]; }
  const cplx& operator()(int r, int c) const { return m_[r * kMaxDim + c]; }

  CMatrix adjoint() const;
  cplx trace() const;
  double max_abs() const;
  double max_abs_diff(const CMatrix& other) const;
  // Frobenius norm.
  double norm() const;
  bool all_finite() const;

  bool hermitian(double tol) const;
  bool unitary(double tol) const;
  // (M + M^dagger) / 2
  CMatrix hermitian_part() const;

  CVector apply(const CVector& x) const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

 private:
  int n_ = 0;
  std::array<cplx, kMaxDim * kMaxDim> m_{};
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(CMatrix a, cplx s);
CVector operator*(const CMatrix& a, const CVector& x);
CMatrix commutator(const CMatrix& a, const CMatrix& b);

struct HermitianEig {
  std::vector<double> values;    // ascending
  std::vector<CVector> vectors;  // orthonormal, vectors[i] pairs with values[i]
};

// Eigendecomposition of a Hermitian matrix with N <= 4. Closed forms for N = 2
// and N = 3 (trigonometric cubic), cyclic Jacobi for N = 4 and as a fallback
// when the closed form loses accuracy. The largest-magnitude component of every
// eigenvector is made real and positive (first such index on ties).
HermitianEig hermitian_eig(const CMatrix& m, double tol = 1e-9);

// Smallest eigenvalue only; cheaper than hermitian_eig for N = 3.
double min_eigenvalue(const CMatrix& m);

void fix_phase(CVector& v);

// Counter-based generator: output k of stream s is a pure function of (s, k),
// so Monte Carlo run k can derive its stream from (master_seed, k) without
// sharing state.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key, std::uint64_t counter = 0) : key_(key), counter_(counter) {}

  static RandomStream derive(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next_u64();
  // Uniform on [-1, 1).
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

std::uint64_t splitmix64(std::uint64_t x);

// t -> Hermitian matrix, hbar = 1.
using TimeDependentHamiltonian = std::function<CMatrix(double)>;

}  // namespace stashort
