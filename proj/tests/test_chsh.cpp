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

#include "bmv/chsh.hpp"

#include <cmath>
#include <numbers>

#include "bmv/dynamics.hpp"
#include "bmv/entanglement.hpp"
#include "bmv/sweep.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bmv;

namespace {

// Degenerate closed forms of the correlation spectrum for the evolved
// state: s1 = e^{-2t}, s2 = s3 = e^{-t} |sin omega t|.
std::array<double, 2> closed_form_singular_values(double w, double t) {
  return {std::exp(-2.0 * t), std::exp(-t) * std::abs(std::sin(w * t))};
}

}  // namespace

TEST_CASE("correlation matrix: maximally mixed and initial states") {
  const CorrelationMatrix zero =
      correlation_matrix(DensityMatrix(cxd(0.25, 0.0) * Mat4::identity()));
  for (double v : zero.entries.e) CHECK(std::abs(v) < 1e-15);

  // |++><++| correlates only along x
  const CorrelationMatrix tm = correlation_matrix(evolve_closed({5.0, 0.0}));
  CHECK(tm.entries(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != 0 || j != 0) CHECK(std::abs(tm.entries(i, j)) < 1e-14);

  const auto sv = singular_values(tm.entries);
  CHECK(sv[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(sv[1]) < 1e-12);
  CHECK(std::abs(sv[2]) < 1e-12);
}

TEST_CASE("correlation spectrum matches the degenerate closed forms") {
  // the spec point, against frozen values
  const auto sv = singular_values(correlation_matrix(evolve_closed({2.0, 0.5})).entries);
  const double s1 = 0.36787944117144233;  // e^{-1}
  const double s2 = 0.51037795154457277;  // e^{-1/2} sin 1
  CHECK(std::abs(sv[0] - s2) < 1e-12);
  CHECK(std::abs(sv[1] - s2) < 1e-12);
  CHECK(std::abs(sv[2] - s1) < 1e-12);

  // and across a grid
  double worst = 0.0;
  for (double w : linspace(0.0, 10.0, 40))
    for (double t : linspace(0.0, 5.0, 40)) {
      const auto got = singular_values(correlation_matrix(evolve_closed({w, t})).entries);
      const auto [c1, c2] = closed_form_singular_values(w, t);
      std::array<double, 3> expect{c1, c2, c2};
      std::sort(expect.begin(), expect.end(), std::greater<>());
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(got[k] - expect[k]));
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("correlation entries stay in [-1, 1]") {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 100; ++rep) {
    const CorrelationMatrix tm =
        correlation_matrix(DensityMatrix(oracle::random_density(rng)));
    for (double v : tm.entries.e) {
      CHECK(v <= 1.0 + 1e-12);
      CHECK(v >= -1.0 - 1e-12);
    }
  }
}

TEST_CASE("Horodecki criterion: Bell state saturates the Tsirelson bound") {
  const ChshAssessment bell = assess_chsh(correlation_matrix(DensityMatrix(oracle::bell_state())));
  CHECK(bell.horodecki_parameter == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(bell.max_chsh_value == doctest::Approx(2.0 * std::numbers::sqrt2).epsilon(1e-13));
  CHECK(bell.violates_chsh);
}

TEST_CASE("Horodecki criterion: product state sits exactly on the boundary") {
  const ChshAssessment prod = assess_chsh(correlation_matrix(evolve_closed({5.0, 0.0})));
  CHECK(prod.horodecki_parameter == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_FALSE(prod.violates_chsh);
}

TEST_CASE("Horodecki parameter: SVD route against closed forms at (10, pi/20)") {
  const double t = std::numbers::pi / 20.0;
  const double m_svd = horodecki_parameter_at({10.0, t});
  const auto [s1, s2] = closed_form_singular_values(10.0, t);
  const double m_closed = std::max(s1 * s1 + s2 * s2, 2.0 * s2 * s2);
  CHECK(std::abs(m_svd - m_closed) < 1e-12);
  CHECK(m_svd == doctest::Approx(1.4608053820972913).epsilon(1e-13));
}

TEST_CASE("Horodecki parameter is bounded and implies entanglement") {
  for (double w : linspace(0.0, 12.0, 25))
    for (double t : linspace(0.0, 3.0, 25)) {
      const double m = horodecki_parameter_at({w, t});
      CHECK(m >= 0.0);
      CHECK(m <= 2.0 + 1e-12);
      if (m > 1.0 + 1e-9) CHECK(ppt_eigenvalue({w, t}) < 0.0);
    }
}

TEST_CASE("Horodecki parameter is invariant under local unitaries") {
  std::mt19937_64 rng(61);
  const DensityMatrix rho = evolve_closed({10.0, std::numbers::pi / 20.0});
  const double m0 = assess_chsh(correlation_matrix(rho)).horodecki_parameter;
  for (int rep = 0; rep < 100; ++rep) {
    const Mat4 local = kron(oracle::random_unitary2(rng), oracle::random_unitary2(rng));
    const DensityMatrix rotated(local * rho.matrix() * local.adjoint());
    const double m = assess_chsh(correlation_matrix(rotated)).horodecki_parameter;
    CHECK(std::abs(m - m0) < 1e-10);
  }
}

TEST_CASE("supremum scan: bracket signs and the strong-coupling limit") {
  CHECK(sup_horodecki(4.0) - 1.0 < 0.0);
  CHECK(sup_horodecki(4.5) - 1.0 > 0.0);

  // near-instant Bell state at very strong coupling
  const double w = 1e6;
  CHECK(horodecki_parameter_at({w, std::numbers::pi / (2.0 * w)}) > 1.9);

  // serial reference is bit-identical
  for (double omega : {3.0, 4.2, 7.7})
    CHECK(sup_horodecki(omega) == sup_horodecki_serial(omega));
}

TEST_CASE("CHSH threshold") {
  const ChshThreshold th = chsh_threshold();
  CHECK(std::abs(th.omega_star - 4.19135) < 1e-4);
  CHECK(std::abs(th.residual) < 1e-6);
  CHECK(th.bracket_lo <= th.omega_star);
  CHECK(th.bracket_hi >= th.omega_star);
  CHECK(th.bracket_hi - th.bracket_lo < 1e-9);
}
