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

#include <functional>

#include "bmv/linalg.hpp"
#include "bmv/model.hpp"

namespace bmv {

/// Decay of single-particle coherences: a factor in [0, 1] applied to the
/// off-diagonal elements at dimensionless time t. The exponential envelope
/// e^{-t} is the physically standard case (environmental scattering);
/// other envelopes plug in through the same interface but only feed the
/// numeric evolution path.
struct DecayModel {
  std::function<double(double)> envelope;

  static DecayModel exponential();

  /// Checks envelope(0) = 1 and monotone non-increase on a sample grid.
  /// Throws std::invalid_argument on violation.
  void validate(double t_max = 10.0, int samples = 256) const;
};

/// Single-particle dephasing: diagonal unchanged, off-diagonals scaled by
/// envelope(t). `a` must be a valid 2x2 density matrix; t >= 0.
Mat2 decohere_single(const Mat2& a, double t, const DecayModel& model = DecayModel::exponential());

/// Two-particle dephasing: entry (i,j) scaled by envelope(t)^h where h is
/// the number of subsystems on which the row and column indices differ.
DensityMatrix decohere_pair(const DensityMatrix& c, double t,
                            const DecayModel& model = DecayModel::exponential());

/// The initial product state |+><+| (x) |+><+| (every entry 1/4).
DensityMatrix initial_plus_state();

/// State with the dephased-and-rotated coherence structure: diagonal 1/4,
/// single-flip coherences (a or conj(a)) and double-flip coherences b,
/// all scaled by 1/4. Valid for any |a| <= 1, 0 <= b <= 1 consistent with
/// a dephasing channel; callers are responsible for physicality.
Mat4 state_from_coherences(const cxd& single_flip, double double_flip);

/// Unchecked closed-form evolved state for arbitrary real omega (used by
/// the Monte-Carlo sampler where jitter can push omega negative); t >= 0.
Mat4 closed_state_matrix(double omega, double t);

/// Closed-form state at dimensionless (omega, t), starting from
/// initial_plus_state(): diagonal 1/4, single-flip coherences
/// (1/4) e^{+-i omega t - t}, double-flip coherences (1/4) e^{-2t}.
DensityMatrix evolve_closed(const SimPoint& point);

/// Independent route: dephase the initial state, then conjugate by the
/// interaction unitary. Matches evolve_closed entrywise for the
/// exponential envelope.
DensityMatrix evolve_numeric(const SimPoint& point,
                             const DecayModel& model = DecayModel::exponential());

}  // namespace bmv
