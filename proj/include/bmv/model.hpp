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

#include "bmv/linalg.hpp"

namespace bmv {

// CODATA 2018 reference values.
inline constexpr double kGravitationalConstant = 6.67430e-11;   // m^3 kg^-1 s^-2
inline constexpr double kReducedPlanck = 1.054571817e-34;       // J s

/// Dimensional description of the experiment: two particles of masses m1,
/// m2 at minimal distance d, each split into a superposition of positions
/// separated by L orthogonally to the line joining them, with decoherence
/// time T. All quantities in SI units.
struct PhysicalParams {
  double m1 = 0.0;  // kg
  double m2 = 0.0;  // kg
  double d = 0.0;   // m
  double L = 0.0;   // m
  double T = 0.0;   // s
  double G = kGravitationalConstant;
  double hbar = kReducedPlanck;

  /// m1, m2, d, T must be strictly positive; L must be non-negative
  /// (L = 0 is the degenerate geometry with zero coupling).
  void validate() const;
};

/// Dimensionless model coordinates: coupling omega = Delta*T/hbar and time
/// t = physical time / T.
struct SimPoint {
  double omega = 0.0;
  double t = 0.0;

  void validate() const;  // omega >= 0, t >= 0, both finite
};

/// Gravitational energy gap between same-side and opposite-side
/// configurations: G*m1*m2*(1/d - 1/sqrt(L^2 + d^2)), in joules.
double coupling_energy(const PhysicalParams& p);

/// omega = coupling_energy(p) * T / hbar.
double dimensionless_coupling(const PhysicalParams& p);

/// Two-particle Hamiltonian -(omega/2) sigma_z (x) sigma_z in units of
/// hbar/T: diag(-omega/2, omega/2, omega/2, -omega/2).
Mat4 hamiltonian(double omega);

/// exp(-i H t) for the Hamiltonian above:
/// diag(e^{i omega t/2}, e^{-i omega t/2}, e^{-i omega t/2}, e^{i omega t/2}).
Mat4 evolution_unitary(const SimPoint& point);

}  // namespace bmv
