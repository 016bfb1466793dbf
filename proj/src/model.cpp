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

#include "bmv/model.hpp"

#include <cmath>
#include <stdexcept>

namespace bmv {

void PhysicalParams::validate() const {
  const bool finite = std::isfinite(m1) && std::isfinite(m2) && std::isfinite(d) &&
                      std::isfinite(L) && std::isfinite(T) && std::isfinite(G) &&
                      std::isfinite(hbar);
  if (!finite) throw std::invalid_argument("PhysicalParams: non-finite value");
  if (m1 <= 0.0 || m2 <= 0.0) throw std::invalid_argument("PhysicalParams: masses must be positive");
  if (d <= 0.0) throw std::invalid_argument("PhysicalParams: distance d must be positive");
  if (L < 0.0) throw std::invalid_argument("PhysicalParams: separation L must be non-negative");
  if (T <= 0.0) throw std::invalid_argument("PhysicalParams: decoherence time T must be positive");
  if (G <= 0.0 || hbar <= 0.0)
    throw std::invalid_argument("PhysicalParams: constants must be positive");
}

void SimPoint::validate() const {
  if (!std::isfinite(omega) || !std::isfinite(t))
    throw std::invalid_argument("SimPoint: non-finite value");
  if (omega < 0.0) throw std::invalid_argument("SimPoint: omega must be non-negative");
  if (t < 0.0) throw std::invalid_argument("SimPoint: t must be non-negative");
}

double coupling_energy(const PhysicalParams& p) {
  p.validate();
  return p.G * p.m1 * p.m2 * (1.0 / p.d - 1.0 / std::sqrt(p.L * p.L + p.d * p.d));
}

double dimensionless_coupling(const PhysicalParams& p) {
  return coupling_energy(p) * p.T / p.hbar;
}

Mat4 hamiltonian(double omega) {
  if (!std::isfinite(omega) || omega < 0.0)
    throw std::invalid_argument("hamiltonian: omega must be non-negative");
  return Mat4::diagonal({-omega / 2.0, omega / 2.0, omega / 2.0, -omega / 2.0});
}

Mat4 evolution_unitary(const SimPoint& point) {
  point.validate();
  const double phase = point.omega * point.t / 2.0;
  const cxd same = std::polar(1.0, phase);      // |same-side> components
  const cxd opposite = std::polar(1.0, -phase);
  return Mat4::diagonal({same, opposite, opposite, same});
}

}  // namespace bmv
