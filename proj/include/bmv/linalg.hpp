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

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace bmv {

using cxd = std::complex<double>;

/// Dense complex matrix of fixed dimension N in {2, 3, 4}, row-major.
///
/// Everything in this library is at most 4x4, so matrices live on the
/// stack and all operations are written out as plain loops.
template <int N>
class Matrix {
  static_assert(N >= 2 && N <= 4, "only dimensions 2, 3 and 4 are supported");

 public:
  constexpr Matrix() = default;

  static Matrix identity() {
    Matrix m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<cxd, N>& d) {
    Matrix m;
    for (int i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr cxd& operator()(int i, int j) { return e_[i * N + j]; }
  constexpr const cxd& operator()(int i, int j) const { return e_[i * N + j]; }

  static constexpr int dimension() { return N; }

  Matrix adjoint() const {
    Matrix r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  Matrix transpose() const {
    Matrix r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  cxd trace() const {
    cxd s = 0.0;
    for (int i = 0; i < N; ++i) s += (*this)(i, i);
    return s;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (int k = 0; k < N * N; ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (int k = 0; k < N * N; ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
  }

  friend Matrix operator*(const cxd& s, const Matrix& a) {
    Matrix r;
    for (int k = 0; k < N * N; ++k) r.e_[k] = s * a.e_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        cxd s = 0.0;
        for (int k = 0; k < N; ++k) s += a(i, k) * b(k, j);
        r(i, j) = s;
      }
    return r;
  }

  /// Largest |entry|.
  double max_abs() const {
    double m = 0.0;
    for (const cxd& v : e_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Largest entrywise |a - b|.
  friend double max_abs_diff(const Matrix& a, const Matrix& b) {
    double m = 0.0;
    for (int k = 0; k < N * N; ++k) m = std::max(m, std::abs(a.e_[k] - b.e_[k]));
    return m;
  }

  /// Largest entrywise deviation from the adjoint.
  double hermiticity_error() const {
    double m = 0.0;
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j)
        m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
  }

  bool is_finite() const {
    for (const cxd& v : e_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

 private:
  std::array<cxd, static_cast<std::size_t>(N) * N> e_{};
};

using Mat2 = Matrix<2>;
using Mat3 = Matrix<3>;
using Mat4 = Matrix<4>;

/// Real 3x3 matrix, row-major. Used for Pauli correlation matrices.
struct Mat3d {
  std::array<double, 9> e{};

  double& operator()(int i, int j) { return e[i * 3 + j]; }
  const double& operator()(int i, int j) const { return e[i * 3 + j]; }
};

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// Kronecker product; entry ((2i+k),(2j+l)) = a(i,j) * b(k,l).
Mat4 kron(const Mat2& a, const Mat2& b);

enum class Subsystem { first, second };

/// Transposition of one 2-dimensional tensor factor in the 2x2 block
/// structure. Preserves trace and Hermiticity.
Mat4 partial_transpose(const Mat4& m, Subsystem which);

/// Eigenvalues of a Hermitian matrix, sorted ascending.
///
/// Cyclic complex Jacobi; backward stable at these sizes. Throws
/// std::invalid_argument if the input deviates from Hermiticity by more
/// than 1e-10 entrywise.
std::array<double, 3> hermitian_eigenvalues(const Mat3& m);
std::array<double, 4> hermitian_eigenvalues(const Mat4& m);

template <int N>
struct Eigensystem {
  std::array<double, N> values;  // ascending
  Matrix<N> vectors;             // columns; m = V diag(values) V^dagger
};

Eigensystem<4> hermitian_eigensystem(const Mat4& m);

/// Singular values of a real 3x3 matrix, sorted descending: square roots
/// of the eigenvalues of M^T M.
std::array<double, 3> singular_values(const Mat3d& m);

/// Validated two-particle state: Hermitian within 1e-12, unit trace
/// within 1e-12, eigenvalues >= -1e-10. Construction throws
/// std::invalid_argument on violation.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat4& m);

  const Mat4& matrix() const { return m_; }

  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPsdTol = -1e-10;

 private:
  Mat4 m_;
};

}  // namespace bmv
