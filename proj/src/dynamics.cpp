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

namespace bmv {

namespace {

// Number of subsystems on which the basis indices of row i and column j
// differ; the dephasing exponent pattern of the two-particle channel.
int flip_count(int i, int j) {
  return static_cast<int>((i >> 1) != (j >> 1)) + static_cast<int>((i & 1) != (j & 1));
}

void check_single_density(const Mat2& a) {
  if (!a.is_finite()) throw std::invalid_argument("decohere_single: non-finite entries");
  if (a.hermiticity_error() > 1e-12)
    throw std::invalid_argument("decohere_single: state is not Hermitian");
  if (std::abs(a.trace() - 1.0) > 1e-12)
    throw std::invalid_argument("decohere_single: state trace is not 1");
  // 2x2 PSD check in closed form: non-negative diagonal and determinant.
  const double det = a(0, 0).real() * a(1, 1).real() - std::norm(a(0, 1));
  if (a(0, 0).real() < -1e-10 || a(1, 1).real() < -1e-10 || det < -1e-10)
    throw std::invalid_argument("decohere_single: state is not positive semidefinite");
}

}  // namespace

DecayModel DecayModel::exponential() {
  return DecayModel{[](double t) { return std::exp(-t); }};
}

void DecayModel::validate(double t_max, int samples) const {
  if (!envelope) throw std::invalid_argument("DecayModel: empty envelope");
  if (std::abs(envelope(0.0) - 1.0) > 1e-12)
    throw std::invalid_argument("DecayModel: envelope(0) must be 1");
  double prev = envelope(0.0);
  for (int i = 1; i <= samples; ++i) {
    const double f = envelope(t_max * i / samples);
    if (!std::isfinite(f) || f < 0.0 || f > prev + 1e-12)
      throw std::invalid_argument("DecayModel: envelope must be non-increasing in [0, 1]");
    prev = f;
  }
}

Mat2 decohere_single(const Mat2& a, double t, const DecayModel& model) {
  if (!(t >= 0.0)) throw std::invalid_argument("decohere_single: t must be non-negative");
  check_single_density(a);
  const double f = model.envelope(t);
  Mat2 r = a;
  r(0, 1) = f * a(0, 1);
  r(1, 0) = f * a(1, 0);
  return r;
}

DensityMatrix decohere_pair(const DensityMatrix& c, double t, const DecayModel& model) {
  if (!(t >= 0.0)) throw std::invalid_argument("decohere_pair: t must be non-negative");
  const double f = model.envelope(t);
  const double factor[3] = {1.0, f, f * f};
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = factor[flip_count(i, j)] * c.matrix()(i, j);
  return DensityMatrix(r);
}

DensityMatrix initial_plus_state() {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = 0.25;
  return DensityMatrix(m);
}

Mat4 state_from_coherences(const cxd& a, double b) {
  const cxd ac = std::conj(a);
  Mat4 m;
  m(0, 0) = 0.25;       m(0, 1) = 0.25 * a;  m(0, 2) = 0.25 * a;  m(0, 3) = 0.25 * b;
  m(1, 0) = 0.25 * ac;  m(1, 1) = 0.25;      m(1, 2) = 0.25 * b;  m(1, 3) = 0.25 * ac;
  m(2, 0) = 0.25 * ac;  m(2, 1) = 0.25 * b;  m(2, 2) = 0.25;      m(2, 3) = 0.25 * ac;
  m(3, 0) = 0.25 * b;   m(3, 1) = 0.25 * a;  m(3, 2) = 0.25 * a;  m(3, 3) = 0.25;
  return m;
}

Mat4 closed_state_matrix(double omega, double t) {
  const double damp = std::exp(-t);
  const cxd a = damp * std::polar(1.0, omega * t);
  return state_from_coherences(a, std::exp(-2.0 * t));
}

DensityMatrix evolve_closed(const SimPoint& point) {
  point.validate();
  return DensityMatrix(closed_state_matrix(point.omega, point.t));
}

DensityMatrix evolve_numeric(const SimPoint& point, const DecayModel& model) {
  point.validate();
  const DensityMatrix dephased = decohere_pair(initial_plus_state(), point.t, model);
  const Mat4 u = evolution_unitary(point);
  return DensityMatrix(u * dephased.matrix() * u.adjoint());
}

}  // namespace bmv
