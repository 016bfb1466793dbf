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

#include <vector>

#include "bmv/linalg.hpp"
#include "bmv/model.hpp"

namespace bmv {

/// Sign tolerance on partial-transpose eigenvalues: well above the
/// eigensolver noise floor, well below any physical scale here.
inline constexpr double kEntanglementTol = 1e-12;

struct EntanglementReport {
  double lambda_min = 0.0;   // smallest eigenvalue of the partial transpose
  double negativity = 0.0;   // sum of |negative eigenvalues|
  bool entangled = false;    // lambda_min < -kEntanglementTol
};

/// Closed form for the partial-transpose eigenvalue that signals
/// entanglement of the evolved state: (1/2) e^{-t} (sinh t - |sin omega t|).
/// Negative exactly when the state is entangled.
double ppt_eigenvalue(const SimPoint& point);

/// Eigensolver route: partial transpose over the second subsystem, full
/// spectrum, negativity and the entanglement verdict.
EntanglementReport analyze_entanglement(const DensityMatrix& rho);

/// First time at which the evolved state is most entangled: the smallest
/// t0 > 0 solving e^{-t0} + sin(omega t0) - omega cos(omega t0) = 0 that
/// is a local minimum of the ppt eigenvalue. The root always lies on the
/// first sine arch (omega t < pi), where the stationarity equation holds
/// without absolute-value bookkeeping; if the bracketing-neighbour check
/// ever rejects it, a dense scan of the eigenvalue takes over.
/// Throws std::domain_error for omega <= 1 (no entanglement develops).
double optimal_interaction_time(double omega);

struct TimeWindow {
  double t_start = 0.0;
  double t_end = 0.0;
};

/// Maximal intervals within (0, t_max] on which the evolved state is
/// entangled, located by a sign-change scan of sinh t - |sin omega t|
/// (grid step <= min(0.01, pi/(50 omega))) with bisection refinement to
/// 1e-10 in t. Empty when omega <= 1.
std::vector<TimeWindow> entanglement_windows(double omega, double t_max);

}  // namespace bmv
