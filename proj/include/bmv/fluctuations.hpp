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

#include <cstdint>

#include "bmv/linalg.hpp"
#include "bmv/model.hpp"

namespace bmv {

/// Standard deviations of the run-to-run Gaussian jitter in the
/// dimensionless time and coupling.
struct FluctuationSpec {
  double s_t = 0.0;
  double s_omega = 0.0;

  void validate() const;  // both finite and >= 0

  /// The first-order averaging is derived for t >> s_t, omega >> s_omega;
  /// false when s_t >= t/3 or s_omega >= omega/3.
  bool small_relative_to(const SimPoint& point) const;
};

/// First-order fluctuation-averaged state with validity flags. The
/// averaged matrix is Hermitian with unit trace by construction but the
/// first-order expansion is not guaranteed positive semidefinite, so the
/// result is flagged instead of rejected.
struct AveragedState {
  Mat4 matrix;
  double min_eigenvalue = 0.0;
  bool positive_semidefinite = false;   // min_eigenvalue >= -1e-10
  bool small_fluctuation_regime = false;

  /// Throws std::invalid_argument when the flags indicate an unphysical
  /// matrix.
  DensityMatrix as_density_matrix() const;
};

/// Gaussian average of the evolved state, expanded to first order in the
/// jitter amplitudes: single-flip coherence
///   a = e^{i omega t - t} e^{-s_omega^2 t^2 / 2 + s_t^2 (i omega - 1)^2 / 2}
/// and double-flip coherence b = e^{-2t} e^{2 s_t^2}.
/// Throws std::domain_error when t <= s_t^2 (the averaged dephasing would
/// run backward in time there).
AveragedState averaged_state(const SimPoint& point, const FluctuationSpec& spec);

/// Closed form for the entanglement-signalling partial-transpose
/// eigenvalue of the averaged state:
///   (1/2) e^{-(t-s_t^2)} [sinh(t-s_t^2)
///        - e^{-(s_t^2/2)(1+omega^2) - (s_omega^2/2) t^2} |sin omega(t-s_t^2)|].
/// Throws std::domain_error when t <= s_t^2.
double averaged_ppt_eigenvalue(const SimPoint& point, const FluctuationSpec& spec);

/// Largest time-jitter variance s_t^2 for which entanglement can still
/// develop: 2 ln(omega) / (1 + omega^2). Throws std::domain_error for
/// omega <= 1.
double max_time_jitter_variance(double omega);

/// Infimum of the averaged ppt eigenvalue over t > s_t^2, by dense scan
/// (log-spaced near the domain edge) plus golden refinement.
double min_averaged_ppt_eigenvalue(double omega, const FluctuationSpec& spec);

/// Empirical jitter threshold: the s_t^2 at which the sign of
/// min_averaged_ppt_eigenvalue flips, located by bisection.
double empirical_jitter_threshold(double omega, double s_omega = 0.0);

struct MonteCarloResult {
  Mat4 mean;                        // entrywise sample mean
  Mat4 std_error;                   // per-entry standard error (re, im parts)
  std::uint64_t clamped_samples = 0;  // draws with t + xi_t s_t < 0, clamped to 0
  std::uint64_t n_samples = 0;
};

/// Sample average of the closed-form evolved state over Gaussian draws
/// (omega + xi_omega s_omega, t + xi_t s_t); negative sampled times are
/// clamped to 0 and counted. Identical (seed, n) give bit-identical
/// results for any thread count: samples are split into fixed blocks of
/// 8192, each with its own counter-derived sub-stream, and block
/// statistics are merged in block order.
MonteCarloResult monte_carlo_average(const SimPoint& point, const FluctuationSpec& spec,
                                     std::uint64_t n_samples, std::uint64_t seed);

/// Single-threaded reference with the identical block structure; must
/// match monte_carlo_average bit for bit.
MonteCarloResult monte_carlo_average_serial(const SimPoint& point, const FluctuationSpec& spec,
                                            std::uint64_t n_samples, std::uint64_t seed);

}  // namespace bmv
