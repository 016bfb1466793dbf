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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace bmv;

TEST_CASE("kron: identity, sigma_z pair, plus-state projectors") {
  CHECK(max_abs_diff(kron(Mat2::identity(), Mat2::identity()), Mat4::identity()) == 0.0);

  const Mat4 zz = kron(pauli_z(), pauli_z());
  CHECK(max_abs_diff(zz, Mat4::diagonal({1.0, -1.0, -1.0, 1.0})) == 0.0);

  const Mat4 pp = kron(oracle::plus_state(), oracle::plus_state());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(pp(i, j) - 0.25) == 0.0);
}

TEST_CASE("kron is bilinear") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const Mat2 a = oracle::random_hermitian<2>(rng);
    const Mat2 b = oracle::random_hermitian<2>(rng);
    const cxd alpha(0.7, -1.3);
    CHECK(max_abs_diff(kron(alpha * a, b), alpha * kron(a, b)) < 1e-14);
    const Mat2 a2 = oracle::random_hermitian<2>(rng);
    CHECK(max_abs_diff(kron(a + a2, b), kron(a, b) + kron(a2, b)) < 1e-14);
  }
}

TEST_CASE("partial transpose of a product state transposes one factor") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int rep = 0; rep < 20; ++rep) {
    // random valid 2x2 states
    const double p = u(rng);
    const double q = u(rng);
    Mat2 a;
    a(0, 0) = p;
    a(1, 1) = 1 - p;
    a(0, 1) = cxd(0.2, 0.1) * std::sqrt(p * (1 - p));
    a(1, 0) = std::conj(a(0, 1));
    Mat2 b;
    b(0, 0) = q;
    b(1, 1) = 1 - q;
    b(0, 1) = cxd(-0.3, 0.25) * std::sqrt(q * (1 - q));
    b(1, 0) = std::conj(b(0, 1));

    CHECK(max_abs_diff(partial_transpose(kron(a, b), Subsystem::second), kron(a, b.transpose())) ==
          0.0);
    CHECK(max_abs_diff(partial_transpose(kron(a, b), Subsystem::first), kron(a.transpose(), b)) ==
          0.0);
    // product states stay positive under partial transposition
    CHECK(hermitian_eigenvalues(partial_transpose(kron(a, b), Subsystem::second))[0] >= -1e-14);
  }
}

TEST_CASE("partial transpose: involution, trace, both subsystems share a spectrum") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 50; ++rep) {
    const Mat4 rho = oracle::random_density(rng);
    const Mat4 pt2 = partial_transpose(rho, Subsystem::second);
    CHECK(max_abs_diff(partial_transpose(pt2, Subsystem::second), rho) == 0.0);
    CHECK(std::abs(pt2.trace() - rho.trace()) == 0.0);
    CHECK(pt2.hermiticity_error() < 1e-15);

    const auto ev1 = hermitian_eigenvalues(partial_transpose(rho, Subsystem::first));
    const auto ev2 = hermitian_eigenvalues(pt2);
    for (int i = 0; i < 4; ++i) CHECK(ev1[i] == doctest::Approx(ev2[i]).epsilon(1e-12));
    // trace preservation through the eigensolver
    CHECK(ev2[0] + ev2[1] + ev2[2] + ev2[3] == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("partial transpose of the Bell state has minimal eigenvalue -1/2") {
  const auto ev = hermitian_eigenvalues(partial_transpose(oracle::bell_state(), Subsystem::second));
  CHECK(ev[0] == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("hermitian_eigenvalues: fixed spectra") {
  const auto ev = hermitian_eigenvalues(Mat4::diagonal({1.0, -1.0, -1.0, 1.0}));
  CHECK(ev[0] == -1.0);
  CHECK(ev[1] == -1.0);
  CHECK(ev[2] == 1.0);
  CHECK(ev[3] == 1.0);

  Mat4 quarter;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) quarter(i, j) = 0.25;
  const auto qv = hermitian_eigenvalues(quarter);  // rank-1 projector
  CHECK(std::abs(qv[0]) < 1e-15);
  CHECK(std::abs(qv[1]) < 1e-15);
  CHECK(std::abs(qv[2]) < 1e-15);
  CHECK(qv[3] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hermitian_eigenvalues: trace and determinant consistency") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const Mat4 m = oracle::random_hermitian<4>(rng);
    const auto ev = hermitian_eigenvalues(m);
    CHECK(ev[0] + ev[1] + ev[2] + ev[3] == doctest::Approx(m.trace().real()).epsilon(1e-10));
    const double det = oracle::determinant(m).real();
    CHECK(ev[0] * ev[1] * ev[2] * ev[3] == doctest::Approx(det).epsilon(1e-10));

    const Mat3 m3 = oracle::random_hermitian<3>(rng);
    const auto ev3 = hermitian_eigenvalues(m3);
    CHECK(ev3[0] + ev3[1] + ev3[2] == doctest::Approx(m3.trace().real()).epsilon(1e-10));
  }
}

TEST_CASE("spectral decomposition reconstructs 1000 random Hermitian matrices") {
  std::mt19937_64 rng(37);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const Mat4 m = oracle::random_hermitian<4>(rng);
    const Eigensystem<4> es = hermitian_eigensystem(m);
    const Mat4 rebuilt =
        es.vectors *
        Mat4::diagonal({es.values[0], es.values[1], es.values[2], es.values[3]}) *
        es.vectors.adjoint();
    worst = std::max(worst, max_abs_diff(rebuilt, m));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
  Mat4 m = Mat4::identity();
  m(0, 1) = cxd(0.5, 0.0);  // missing conjugate partner
  CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("singular_values: diagonal and zero matrices") {
  Mat3d d;
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const auto sv = singular_values(d);
  CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(sv[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sv[2] == doctest::Approx(1.0).epsilon(1e-14));

  const auto zv = singular_values(Mat3d{});
  CHECK(zv[0] == 0.0);
  CHECK(zv[1] == 0.0);
  CHECK(zv[2] == 0.0);
}

TEST_CASE("DensityMatrix validates its invariants") {
  CHECK_NOTHROW(DensityMatrix(oracle::bell_state()));

  Mat4 bad_trace = oracle::bell_state();
  bad_trace(0, 0) = 0.6;
  CHECK_THROWS_AS(DensityMatrix{bad_trace}, std::invalid_argument);

  Mat4 non_hermitian = oracle::bell_state();
  non_hermitian(0, 3) = cxd(0.5, 0.1);
  CHECK_THROWS_AS(DensityMatrix{non_hermitian}, std::invalid_argument);

  // Hermitian, unit trace, but indefinite
  Mat4 indefinite = Mat4::diagonal({0.75, 0.75, -0.25, -0.25});
  CHECK_THROWS_AS(DensityMatrix{indefinite}, std::invalid_argument);
}
