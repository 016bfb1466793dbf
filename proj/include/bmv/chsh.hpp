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
#include "bmv/model.hpp"

namespace bmv {

/// Pauli correlation matrix T_ij = tr(rho sigma_i (x) sigma_j); all nine
/// entries real in [-1, 1].
struct CorrelationMatrix {
  Mat3d entries;
};

/// Throws std::invalid_argument if any trace has imaginary residue above
/// 1e-12 or magnitude above 1 + 1e-12 (impossible for a valid state).
CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

struct ChshAssessment {
  double horodecki_parameter = 0.0;  // sum of the two largest squared singular values
  double max_chsh_value = 0.0;       // 2 sqrt(horodecki_parameter), at most 2 sqrt(2)
  bool violates_chsh = false;        // horodecki_parameter > 1
};

/// Horodecki criterion from a full SVD of the correlation matrix; makes no
/// use of the degenerate closed forms, so it also applies to
/// fluctuation-averaged states.
ChshAssessment assess_chsh(const CorrelationMatrix& tm);

/// Horodecki parameter of the closed-form evolved state at a point.
double horodecki_parameter_at(const SimPoint& point);

/// Supremum of the Horodecki parameter over t in (0, 3]. Beyond t = 3 both
/// singular-value envelopes e^{-t} and e^{-2t} are below e^{-3}, leaving
/// the parameter far under the violation threshold. Grid step
/// min(0.005, pi/(100 omega)), every local maximum refined by golden
/// section.
double sup_horodecki(double omega);

/// Single-threaded reference; must match sup_horodecki bit for bit.
double sup_horodecki_serial(double omega);

struct ChshThreshold {
  double omega_star = 0.0;
  double bracket_lo = 0.0;   // final bisection bracket
  double bracket_hi = 0.0;
  double residual = 0.0;     // sup_t M - 1 at omega_star
};

/// Smallest coupling for which the evolved state can violate the CHSH
/// inequality at some time: bisection of sup_t M(omega, t) - 1 starting
/// from the bracket [4.0, 4.5].
ChshThreshold chsh_threshold();

}  // namespace bmv
