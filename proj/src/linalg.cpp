// Copyright 2026 The bmvsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bmv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmv {

namespace {

constexpr double kHermitianInputTol = 1e-10;

// One cyclic Jacobi pass eliminating entry (p,q) of a Hermitian matrix.
// The rotation is the complex plane rotation J with J(p,p)=J(q,q)=c,
// J(p,q)=s*u, J(q,p)=-s*conj(u), u = a_pq/|a_pq|; A <- J^H A J.
template <int N>
void jacobi_rotate(Matrix<N>& a, Matrix<N>* vectors, int p, int q) {
  const cxd apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) {
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    return;
  }
  const cxd u = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (int k = 0; k < N; ++k) {
    if (k == p || k == q) continue;
    const cxd akp = a(k, p);
    const cxd akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(u) * akq;
    a(k, q) = s * u * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  if (vectors != nullptr) {
    for (int k = 0; k < N; ++k) {
      const cxd vkp = (*vectors)(k, p);
      const cxd vkq = (*vectors)(k, q);
      (*vectors)(k, p) = c * vkp - s * std::conj(u) * vkq;
      (*vectors)(k, q) = s * u * vkp + c * vkq;
    }
  }
}

template <int N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

template <int N>
std::array<double, N> jacobi_eigenvalues(Matrix<N> a, Matrix<N>* vectors) {
  if (!a.is_finite()) throw std::invalid_argument("hermitian_eigenvalues: non-finite entries");
  if (a.hermiticity_error() > kHermitianInputTol)
    throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");

  if (vectors != nullptr) *vectors = Matrix<N>::identity();
  const double scale = std::max(a.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 60; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * scale * N) break;
    for (int p = 0; p < N - 1; ++p)
      for (int q = p + 1; q < N; ++q) jacobi_rotate(a, vectors, p, q);
  }

  std::array<double, N> ev;
  std::array<int, N> order;
  for (int i = 0; i < N; ++i) {
    ev[i] = a(i, i).real();
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](int i, int j) { return ev[i] < ev[j]; });

  std::array<double, N> sorted;
  for (int i = 0; i < N; ++i) sorted[i] = ev[order[i]];
  if (vectors != nullptr) {
    Matrix<N> v = *vectors;
    for (int j = 0; j < N; ++j)
      for (int i = 0; i < N; ++i) (*vectors)(i, j) = v(i, order[j]);
  }
  return sorted;
}

}  // namespace

Mat2 pauli_x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m(0, 1) = cxd(0.0, -1.0);
  m(1, 0) = cxd(0.0, 1.0);
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Mat4 partial_transpose(const Mat4& m, Subsystem which) {
  Mat4 r;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) {
          if (which == Subsystem::second)
            r(2 * i1 + i2, 2 * j1 + j2) = m(2 * i1 + j2, 2 * j1 + i2);
          else
            r(2 * i1 + i2, 2 * j1 + j2) = m(2 * j1 + i2, 2 * i1 + j2);
        }
  return r;
}

std::array<double, 3> hermitian_eigenvalues(const Mat3& m) {
  return jacobi_eigenvalues<3>(m, nullptr);
}

std::array<double, 4> hermitian_eigenvalues(const Mat4& m) {
  return jacobi_eigenvalues<4>(m, nullptr);
}

Eigensystem<4> hermitian_eigensystem(const Mat4& m) {
  Eigensystem<4> es;
  es.values = jacobi_eigenvalues<4>(m, &es.vectors);
  return es;
}

std::array<double, 3> singular_values(const Mat3d& m) {
  for (double v : m.e)
    if (!std::isfinite(v)) throw std::invalid_argument("singular_values: non-finite entries");

  Mat3 gram;  // M^T M, symmetric
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m(k, i) * m(k, j);
      gram(i, j) = s;
    }
  const std::array<double, 3> ev = hermitian_eigenvalues(gram);
  // ascending eigenvalues of the Gram matrix -> descending singular values
  return {std::sqrt(std::max(ev[2], 0.0)), std::sqrt(std::max(ev[1], 0.0)),
          std::sqrt(std::max(ev[0], 0.0))};
}

DensityMatrix::DensityMatrix(const Mat4& m) : m_(m) {
  if (!m.is_finite()) throw std::invalid_argument("DensityMatrix: non-finite entries");
  if (m.hermiticity_error() > kHermitianTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  const cxd tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTol) throw std::invalid_argument("DensityMatrix: trace is not 1");
  if (hermitian_eigenvalues(m)[0] < kPsdTol)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

}  // namespace bmv
