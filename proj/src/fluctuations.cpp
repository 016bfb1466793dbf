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

#include "bmv/fluctuations.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bmv/dynamics.hpp"
#include "bmv/numeric.hpp"
#include "bmv/rng.hpp"

namespace bmv {

namespace {

constexpr std::uint64_t kMcBlockSize = 8192;

// Welford accumulator; blocks are merged with the parallel (Chan) update
// so the result is independent of how samples were grouped, as long as
// the merge order is fixed.
struct Accumulator {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    n += 1.0;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }

  void merge(const Accumulator& o) {
    if (o.n == 0.0) return;
    if (n == 0.0) {
      *this = o;
      return;
    }
    const double d = o.mean - mean;
    const double total = n + o.n;
    mean += d * (o.n / total);
    m2 += o.m2 + d * d * (n * o.n / total);
    n = total;
  }

  double std_error() const {
    if (n < 2.0) return 0.0;
    return std::sqrt(m2 / (n - 1.0) / n);
  }
};

// Per-block statistics of the two coherence amplitudes that determine
// every entry of the sampled state: a = e^{(i omega - 1) t} (single flip)
// and b = e^{-2t} (double flip). Diagonal entries are constant 1/4.
struct BlockStats {
  Accumulator a_re, a_im, b;
  std::uint64_t clamped = 0;

  void merge(const BlockStats& o) {
    a_re.merge(o.a_re);
    a_im.merge(o.a_im);
    b.merge(o.b);
    clamped += o.clamped;
  }
};

BlockStats run_block(const SimPoint& point, const FluctuationSpec& spec, std::uint64_t seed,
                     std::uint64_t block_index, std::uint64_t count) {
  NormalPairStream stream(block_seed(seed, block_index));
  BlockStats stats;
  for (std::uint64_t k = 0; k < count; ++k) {
    const GaussianPair xi = stream.next();
    double t = point.t + xi.z0 * spec.s_t;
    if (t < 0.0) {
      t = 0.0;
      ++stats.clamped;
    }
    const double omega = point.omega + xi.z1 * spec.s_omega;
    const double damp = std::exp(-t);
    stats.a_re.add(damp * std::cos(omega * t));
    stats.a_im.add(damp * std::sin(omega * t));
    stats.b.add(std::exp(-2.0 * t));
  }
  return stats;
}

MonteCarloResult assemble_result(const std::vector<BlockStats>& blocks, std::uint64_t n_samples) {
  BlockStats total;
  for (const BlockStats& b : blocks) total.merge(b);  // fixed block order

  MonteCarloResult result;
  result.n_samples = n_samples;
  result.clamped_samples = total.clamped;
  result.mean = state_from_coherences(cxd(total.a_re.mean, total.a_im.mean), total.b.mean);

  const double se_a_re = 0.25 * total.a_re.std_error();
  const double se_a_im = 0.25 * total.a_im.std_error();
  const double se_b = 0.25 * total.b.std_error();
  Mat4 se;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const bool double_flip = ((i >> 1) != (j >> 1)) && ((i & 1) != (j & 1));
      se(i, j) = double_flip ? cxd(se_b, 0.0) : cxd(se_a_re, se_a_im);
    }
  result.std_error = se;
  return result;
}

std::vector<BlockStats> make_blocks(std::uint64_t n_samples) {
  if (n_samples == 0) throw std::invalid_argument("monte_carlo_average: need at least one sample");
  return std::vector<BlockStats>((n_samples + kMcBlockSize - 1) / kMcBlockSize);
}

}  // namespace

void FluctuationSpec::validate() const {
  if (!std::isfinite(s_t) || !std::isfinite(s_omega))
    throw std::invalid_argument("FluctuationSpec: non-finite deviation");
  if (s_t < 0.0 || s_omega < 0.0)
    throw std::invalid_argument("FluctuationSpec: deviations must be non-negative");
}

bool FluctuationSpec::small_relative_to(const SimPoint& point) const {
  return s_t < point.t / 3.0 && s_omega < point.omega / 3.0;
}

DensityMatrix AveragedState::as_density_matrix() const { return DensityMatrix(matrix); }

AveragedState averaged_state(const SimPoint& point, const FluctuationSpec& spec) {
  point.validate();
  spec.validate();
  const double st2 = spec.s_t * spec.s_t;
  if (point.t <= st2)
    throw std::domain_error("averaged_state: requires t > s_t^2 (averaged dephasing would run backward)");

  const double w = point.omega;
  const double t = point.t;
  // (i omega - 1)^2 = (1 - omega^2) - 2 i omega
  const cxd exponent(-t - 0.5 * spec.s_omega * spec.s_omega * t * t + 0.5 * st2 * (1.0 - w * w),
                     w * t - st2 * w);
  const cxd a = std::exp(exponent);
  const double b = std::exp(-2.0 * t + 2.0 * st2);

  AveragedState state;
  state.matrix = state_from_coherences(a, b);
  state.min_eigenvalue = hermitian_eigenvalues(state.matrix)[0];
  state.positive_semidefinite = state.min_eigenvalue >= -1e-10;
  state.small_fluctuation_regime = spec.small_relative_to(point);
  return state;
}

double averaged_ppt_eigenvalue(const SimPoint& point, const FluctuationSpec& spec) {
  point.validate();
  spec.validate();
  const double st2 = spec.s_t * spec.s_t;
  if (point.t <= st2)
    throw std::domain_error("averaged_ppt_eigenvalue: requires t > s_t^2");
  const double tau = point.t - st2;
  const double damping = std::exp(-0.5 * st2 * (1.0 + point.omega * point.omega) -
                                  0.5 * spec.s_omega * spec.s_omega * point.t * point.t);
  return 0.5 * std::exp(-tau) * (std::sinh(tau) - damping * std::abs(std::sin(point.omega * tau)));
}

double max_time_jitter_variance(double omega) {
  if (!std::isfinite(omega)) throw std::invalid_argument("max_time_jitter_variance: omega not finite");
  if (omega <= 1.0)
    throw std::domain_error("max_time_jitter_variance: no entanglement develops for omega <= 1");
  return 2.0 * std::log(omega) / (1.0 + omega * omega);
}

double min_averaged_ppt_eigenvalue(double omega, const FluctuationSpec& spec) {
  spec.validate();
  const double st2 = spec.s_t * spec.s_t;
  const auto lambda_at_offset = [&](double tau) {
    return averaged_ppt_eigenvalue({omega, st2 + tau}, spec);
  };

  // The dip can sit arbitrarily close to the domain edge t = s_t^2 when
  // the jitter is near-critical, hence the log-spaced section.
  std::vector<double> taus;
  taus.reserve(1100);
  for (int i = 0; i < 500; ++i) taus.push_back(std::pow(10.0, -10.0 + 10.0 * i / 499.0));
  for (int i = 1; i <= 600; ++i) taus.push_back(1.0 + 3.0 * i / 600.0);

  std::size_t best = 0;
  double best_val = lambda_at_offset(taus[0]);
  for (std::size_t i = 1; i < taus.size(); ++i) {
    const double v = lambda_at_offset(taus[i]);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = best > 0 ? taus[best - 1] : taus[0] / 2.0;
  const double hi = best + 1 < taus.size() ? taus[best + 1] : taus.back();
  const double refined = lambda_at_offset(golden_minimize(lambda_at_offset, lo, hi));
  return std::min(best_val, refined);
}

double empirical_jitter_threshold(double omega, double s_omega) {
  if (omega <= 1.0)
    throw std::domain_error("empirical_jitter_threshold: no entanglement develops for omega <= 1");
  const auto entangles = [&](double st2) {
    return min_averaged_ppt_eigenvalue(omega, {std::sqrt(st2), s_omega}) < 0.0;
  };
  double lo = 1e-9;  // entangled side for any omega > 1
  double hi = 1.5;   // beyond the largest possible threshold
  if (!entangles(lo)) return 0.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (entangles(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

MonteCarloResult monte_carlo_average(const SimPoint& point, const FluctuationSpec& spec,
                                     std::uint64_t n_samples, std::uint64_t seed) {
  point.validate();
  spec.validate();
  std::vector<BlockStats> blocks = make_blocks(n_samples);
  const std::int64_t n_blocks = static_cast<std::int64_t>(blocks.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t bi = 0; bi < n_blocks; ++bi) {
    const std::uint64_t offset = static_cast<std::uint64_t>(bi) * kMcBlockSize;
    const std::uint64_t count = std::min(kMcBlockSize, n_samples - offset);
    blocks[static_cast<std::size_t>(bi)] =
        run_block(point, spec, seed, static_cast<std::uint64_t>(bi), count);
  }
  return assemble_result(blocks, n_samples);
}

MonteCarloResult monte_carlo_average_serial(const SimPoint& point, const FluctuationSpec& spec,
                                            std::uint64_t n_samples, std::uint64_t seed) {
  point.validate();
  spec.validate();
  std::vector<BlockStats> blocks = make_blocks(n_samples);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const std::uint64_t offset = bi * kMcBlockSize;
    const std::uint64_t count = std::min(kMcBlockSize, n_samples - offset);
    blocks[bi] = run_block(point, spec, seed, bi, count);
  }
  return assemble_result(blocks, n_samples);
}

}  // namespace bmv
