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

#include "bmv/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bmv/numeric.hpp"

namespace bmv {

namespace {

// sinh t - |sin omega t|; same sign as the ppt eigenvalue.
double window_sign_function(double omega, double t) {
  return std::sinh(t) - std::abs(std::sin(omega * t));
}

// Stationarity condition of the ppt eigenvalue on the first sine arch.
double optimal_time_residual(double omega, double t) {
  return std::exp(-t) + std::sin(omega * t) - omega * std::cos(omega * t);
}

double lambda_of(double omega, double t) {
  return 0.5 * std::exp(-t) * (std::sinh(t) - std::abs(std::sin(omega * t)));
}

// Fallback when the first-arch root is rejected by the local-minimum
// check: dense scan plus golden refinement of the eigenvalue itself.
double minimize_lambda_directly(double omega) {
  const double t_max = 5.0;
  const int n = 200000;
  int best = 1;
  double best_val = lambda_of(omega, t_max / n);
  for (int i = 2; i <= n; ++i) {
    const double v = lambda_of(omega, t_max * i / n);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double h = t_max / n;
  return golden_minimize([&](double t) { return lambda_of(omega, t); },
                         std::max(h * (best - 1), h / 2), h * (best + 1));
}

}  // namespace

double ppt_eigenvalue(const SimPoint& point) {
  point.validate();
  return lambda_of(point.omega, point.t);
}

EntanglementReport analyze_entanglement(const DensityMatrix& rho) {
  const Mat4 pt = partial_transpose(rho.matrix(), Subsystem::second);
  const std::array<double, 4> ev = hermitian_eigenvalues(pt);
  EntanglementReport report;
  report.lambda_min = ev[0];
  for (double e : ev)
    if (e < 0.0) report.negativity -= e;
  report.entangled = report.lambda_min < -kEntanglementTol;
  return report;
}

double optimal_interaction_time(double omega) {
  if (!std::isfinite(omega)) throw std::invalid_argument("optimal_interaction_time: omega not finite");
  if (omega <= 1.0)
    throw std::domain_error("optimal_interaction_time: no entanglement develops for omega <= 1");

  // March over the first arch; the residual starts at 1 - omega < 0 and is
  // positive by omega t = pi, so a sign change is always bracketed.
  const double arch = std::numbers::pi / omega;
  const int n_march = 400;
  double lo = arch * 1e-12;
  double f_lo = optimal_time_residual(omega, lo);
  double t0 = -1.0;
  for (int i = 1; i <= n_march; ++i) {
    const double hi = arch * i / n_march;
    const double f_hi = optimal_time_residual(omega, hi);
    if ((f_lo < 0.0) && (f_hi >= 0.0)) {
      t0 = bisect([&](double t) { return optimal_time_residual(omega, t); }, lo, hi);
      break;
    }
    lo = hi;
    f_lo = f_hi;
  }

  if (t0 > 0.0) {
    // Confirm this root is a minimum of the eigenvalue, not a kink artifact.
    const double h = std::max(1e-9, 1e-6 * t0);
    const double l0 = lambda_of(omega, t0);
    if (l0 <= lambda_of(omega, t0 - h) && l0 <= lambda_of(omega, t0 + h)) return t0;
  }
  return minimize_lambda_directly(omega);
}

std::vector<TimeWindow> entanglement_windows(double omega, double t_max) {
  if (!std::isfinite(omega) || omega < 0.0)
    throw std::invalid_argument("entanglement_windows: omega must be non-negative");
  if (!(t_max > 0.0)) throw std::invalid_argument("entanglement_windows: t_max must be positive");

  double step = 0.01;
  if (omega > 0.0) step = std::min(step, std::numbers::pi / (50.0 * omega));
  const auto f = [&](double t) { return window_sign_function(omega, t); };

  std::vector<TimeWindow> windows;
  bool inside = false;
  double start = 0.0;
  double prev_t = 0.0;
  // f(0) = 0; the state at t = 0 is a boundary point, not entangled.
  double prev_f = 0.0;
  const long n = std::lround(std::ceil(t_max / step));
  for (long i = 1; i <= n; ++i) {
    const double t = std::min(t_max * static_cast<double>(i) / static_cast<double>(n), t_max);
    const double ft = f(t);
    if (!inside && ft < 0.0) {
      // Window opens: refine unless it opened at t = 0+ (prev_f == 0).
      start = (prev_f > 0.0) ? bisect(f, prev_t, t, 60) : prev_t;
      inside = true;
    } else if (inside && ft >= 0.0) {
      windows.push_back({start, bisect(f, prev_t, t, 60)});
      inside = false;
    }
    prev_t = t;
    prev_f = ft;
  }
  if (inside) windows.push_back({start, t_max});
  return windows;
}

}  // namespace bmv
