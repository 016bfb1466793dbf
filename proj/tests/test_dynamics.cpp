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

#include "bmv/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "bmv/sweep.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bmv;

TEST_CASE("decohere_single: exponential damping of the coherences") {
  const Mat2 damped = decohere_single(oracle::plus_state(), 1.0);
  CHECK(damped(0, 0) == cxd(0.5, 0.0));
  CHECK(damped(1, 1) == cxd(0.5, 0.0));
  CHECK(std::abs(damped(0, 1) - 0.5 * std::exp(-1.0)) < 1e-16);
  CHECK(std::abs(damped(1, 0) - 0.5 * std::exp(-1.0)) < 1e-16);

  // t = 0 leaves any state untouched
  CHECK(max_abs_diff(decohere_single(oracle::plus_state(), 0.0), oracle::plus_state()) == 0.0);

  // full dephasing limit
  const Mat2 late = decohere_single(oracle::plus_state(), 700.0);
  CHECK(std::abs(late(0, 1)) < 1e-300);
  CHECK(late(0, 0) == cxd(0.5, 0.0));

  CHECK_THROWS_AS(decohere_single(oracle::plus_state(), -0.1), std::invalid_argument);
}

TEST_CASE("decohere_pair: flip-count exponent pattern") {
  const DensityMatrix initial = initial_plus_state();
  const DensityMatrix damped = decohere_pair(initial, std::log(2.0));
  // envelope = 1/2: diagonal 1/4, single-flip 1/8, double-flip 1/16
  const double expect[4][4] = {{0.25, 0.125, 0.125, 0.0625},
                               {0.125, 0.25, 0.0625, 0.125},
                               {0.125, 0.0625, 0.25, 0.125},
                               {0.0625, 0.125, 0.125, 0.25}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(damped.matrix()(i, j) - expect[i][j]) < 1e-15);

  // diagonal states are fixed points
  const DensityMatrix diag{Mat4::diagonal({0.1, 0.2, 0.3, 0.4})};
  for (double t : {0.0, 0.7, 3.0, 50.0})
    CHECK(max_abs_diff(decohere_pair(diag, t).matrix(), diag.matrix()) == 0.0);

  CHECK_THROWS_AS(decohere_pair(initial, -1.0), std::invalid_argument);
}

TEST_CASE("decohere_pair factorizes over product states") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int rep = 0; rep < 20; ++rep) {
    const double p = u(rng);
    const double q = u(rng);
    Mat2 a;
    a(0, 0) = p;
    a(1, 1) = 1 - p;
    a(0, 1) = cxd(0.3, -0.2) * std::sqrt(p * (1 - p));
    a(1, 0) = std::conj(a(0, 1));
    Mat2 b;
    b(0, 0) = q;
    b(1, 1) = 1 - q;
    b(0, 1) = cxd(0.1, 0.4) * std::sqrt(q * (1 - q));
    b(1, 0) = std::conj(b(0, 1));

    for (double t : {0.0, 0.3, 1.7}) {
      const Mat4 joint = decohere_pair(DensityMatrix(kron(a, b)), t).matrix();
      const Mat4 factored = kron(decohere_single(a, t), decohere_single(b, t));
      CHECK(max_abs_diff(joint, factored) < 1e-14);
    }
  }
}

TEST_CASE("evolve_closed: fixed entries and the interaction-picture oracle") {
  // t = 0: the initial product state
  const Mat4 at0 = evolve_closed({5.0, 0.0}).matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(at0(i, j) == cxd(0.25, 0.0));

  // omega = 0: pure dephasing of the initial state
  for (double t : {0.2, 1.0, 4.0}) {
    CHECK(max_abs_diff(evolve_closed({0.0, t}).matrix(),
                       decohere_pair(initial_plus_state(), t).matrix()) < 1e-16);
  }

  // frozen entries at (omega, t) = (2, 0.5)
  const Mat4 rho = evolve_closed({2.0, 0.5}).matrix();
  CHECK(std::abs(rho(0, 1) - cxd(0.081927478505614965, 0.12759448788614319)) < 1e-15);
  CHECK(std::abs(rho(0, 3) - cxd(0.091969860292860584, 0.0)) < 1e-15);

  // hand-rolled interaction picture: rho = U (dephased rho_0) U^dagger
  for (const auto& [w, t] : {std::pair{2.0, 0.5}, {0.7, 1.1}, {9.0, 2.5}}) {
    const Mat4 u = evolution_unitary({w, t});
    const Mat4 composed = u * decohere_pair(initial_plus_state(), t).matrix() * u.adjoint();
    CHECK(max_abs_diff(evolve_closed({w, t}).matrix(), composed) < 1e-12);
  }
}

TEST_CASE("evolve_numeric equals evolve_closed on a 50x50 grid") {
  double worst = 0.0;
  for (double w : linspace(0.0, 10.0, 50))
    for (double t : linspace(0.0, 5.0, 50))
      worst = std::max(worst, max_abs_diff(evolve_numeric({w, t}).matrix(),
                                           evolve_closed({w, t}).matrix()));
  CHECK(worst < 1e-12);
}

TEST_CASE("evolve_numeric with a Gaussian envelope stays a valid state") {
  const DecayModel gaussian{[](double t) { return std::exp(-t * t); }};
  gaussian.validate();
  for (double w : {0.0, 1.5, 8.0})
    for (double t : linspace(0.0, 4.0, 21)) {
      // DensityMatrix construction enforces Hermiticity, trace and PSD
      CHECK_NOTHROW(evolve_numeric({w, t}, gaussian));
    }
  // and it is genuinely a different dynamics from the exponential default
  const Mat4 g = evolve_numeric({2.0, 1.5}, gaussian).matrix();
  const Mat4 e = evolve_numeric({2.0, 1.5}).matrix();
  CHECK(max_abs_diff(g, e) > 1e-3);
}

TEST_CASE("state invariants on a grid: Hermitian, unit trace, PSD, flat diagonal") {
  for (double w : linspace(0.0, 20.0, 21))
    for (double t : linspace(0.0, 10.0, 21)) {
      const Mat4 rho = evolve_closed({w, t}).matrix();
      CHECK(rho.hermiticity_error() < 1e-14);
      CHECK(std::abs(rho.trace() - 1.0) < 1e-14);
      CHECK(hermitian_eigenvalues(rho)[0] >= -1e-10);
      for (int i = 0; i < 4; ++i) CHECK(rho(i, i) == cxd(0.25, 0.0));
    }
}

TEST_CASE("dephasing commutes with the interaction unitary") {
  for (const auto& [w, t] : {std::pair{1.0, 0.4}, {3.0, 1.2}, {15.0, 0.05}}) {
    const Mat4 u = evolution_unitary({w, t});
    const Mat4 decohere_then_rotate =
        u * decohere_pair(initial_plus_state(), t).matrix() * u.adjoint();
    const Mat4 rotate_then_decohere =
        decohere_pair(DensityMatrix(u * initial_plus_state().matrix() * u.adjoint()), t).matrix();
    CHECK(max_abs_diff(decohere_then_rotate, rotate_then_decohere) < 1e-13);
  }
}

TEST_CASE("purity never increases along the evolution") {
  for (double w : {0.0, 0.5, 2.0, 11.0}) {
    double prev = 1.0 + 1e-12;
    for (double t : linspace(0.0, 6.0, 200)) {
      const Mat4 rho = evolve_closed({w, t}).matrix();
      const double purity = (rho * rho).trace().real();
      CHECK(purity <= prev + 1e-12);
      prev = purity;
    }
  }
}

TEST_CASE("DecayModel validation") {
  CHECK_NOTHROW(DecayModel::exponential().validate());
  CHECK_THROWS_AS(DecayModel{[](double t) { return std::exp(t); }}.validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(DecayModel{[](double t) { return 0.5 + 0.0 * t; }}.validate(),
                  std::invalid_argument);
}
