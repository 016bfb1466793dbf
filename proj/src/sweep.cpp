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

#include "bmv/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "bmv/chsh.hpp"
#include "bmv/entanglement.hpp"

namespace bmv {

namespace {

// Domain checks run before the parallel loops; an exception must never
// escape an OpenMP region.
void require_all_at_least(std::span<const double> xs, double bound, const char* what) {
  for (double x : xs)
    if (!std::isfinite(x) || !(x >= bound)) throw std::invalid_argument(what);
}

void require_all_above(std::span<const double> xs, double bound, const char* what) {
  for (double x : xs)
    if (!std::isfinite(x) || !(x > bound)) throw std::domain_error(what);
}

// All curve kernels share this shape; `Fn` is stateless so the parallel
// and serial paths execute identical per-point arithmetic. A per-point
// exception is captured and rethrown after the loop; letting it escape
// the OpenMP region would terminate the process.
template <class Fn>
std::vector<double> run_kernel(std::span<const double> xs, Fn&& fn, bool parallel) {
  std::vector<double> out(xs.size());
  const std::int64_t n = static_cast<std::int64_t>(xs.size());
  std::exception_ptr failure = nullptr;
  std::int64_t failure_index = n;  // report the lowest failing index, thread order aside
  const auto guarded = [&](std::int64_t i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(xs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(bmv_run_kernel_failure)
      if (i < failure_index) {
        failure_index = i;
        failure = std::current_exception();
      }
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) guarded(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) guarded(i);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::vector<double> linspace(double start, double stop, int steps) {
  if (steps < 2) throw std::invalid_argument("linspace: need at least 2 steps");
  if (!(start < stop)) throw std::invalid_argument("linspace: start must be below stop");
  std::vector<double> xs(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    xs[static_cast<std::size_t>(i)] = start + (stop - start) * i / (steps - 1);
  xs.back() = stop;
  return xs;
}

std::vector<double> map_curve(std::span<const double> xs, const std::function<double(double)>& f) {
  return run_kernel(xs, [&](double x) { return f(x); }, true);
}

std::vector<double> map_curve_serial(std::span<const double> xs,
                                     const std::function<double(double)>& f) {
  return run_kernel(xs, [&](double x) { return f(x); }, false);
}

std::vector<double> lambda_curve(double omega, std::span<const double> ts) {
  require_all_at_least(ts, 0.0, "lambda_curve: t must be non-negative");
  return run_kernel(ts, [omega](double t) { return ppt_eigenvalue({omega, t}); }, true);
}

std::vector<double> lambda_curve_serial(double omega, std::span<const double> ts) {
  require_all_at_least(ts, 0.0, "lambda_curve: t must be non-negative");
  return run_kernel(ts, [omega](double t) { return ppt_eigenvalue({omega, t}); }, false);
}

std::vector<double> averaged_lambda_curve(double omega, const FluctuationSpec& spec,
                                          std::span<const double> ts) {
  spec.validate();
  require_all_above(ts, spec.s_t * spec.s_t, "averaged_lambda_curve: requires t > s_t^2");
  return run_kernel(
      ts, [omega, &spec](double t) { return averaged_ppt_eigenvalue({omega, t}, spec); }, true);
}

std::vector<double> averaged_lambda_curve_serial(double omega, const FluctuationSpec& spec,
                                                 std::span<const double> ts) {
  spec.validate();
  require_all_above(ts, spec.s_t * spec.s_t, "averaged_lambda_curve: requires t > s_t^2");
  return run_kernel(
      ts, [omega, &spec](double t) { return averaged_ppt_eigenvalue({omega, t}, spec); }, false);
}

std::vector<double> horodecki_curve(double omega, std::span<const double> ts) {
  require_all_at_least(ts, 0.0, "horodecki_curve: t must be non-negative");
  return run_kernel(ts, [omega](double t) { return horodecki_parameter_at({omega, t}); }, true);
}

std::vector<double> horodecki_curve_serial(double omega, std::span<const double> ts) {
  require_all_at_least(ts, 0.0, "horodecki_curve: t must be non-negative");
  return run_kernel(ts, [omega](double t) { return horodecki_parameter_at({omega, t}); }, false);
}

std::vector<double> optimal_time_curve(std::span<const double> omegas) {
  require_all_above(omegas, 1.0, "optimal_time_curve: requires omega > 1");
  return run_kernel(omegas, [](double w) { return optimal_interaction_time(w); }, true);
}

std::vector<double> optimal_time_curve_serial(std::span<const double> omegas) {
  require_all_above(omegas, 1.0, "optimal_time_curve: requires omega > 1");
  return run_kernel(omegas, [](double w) { return optimal_interaction_time(w); }, false);
}

std::vector<double> jitter_bound_curve(std::span<const double> omegas) {
  require_all_above(omegas, 1.0, "jitter_bound_curve: requires omega > 1");
  return run_kernel(omegas, [](double w) { return max_time_jitter_variance(w); }, true);
}

std::vector<double> jitter_bound_curve_serial(std::span<const double> omegas) {
  require_all_above(omegas, 1.0, "jitter_bound_curve: requires omega > 1");
  return run_kernel(omegas, [](double w) { return max_time_jitter_variance(w); }, false);
}

}  // namespace bmv
