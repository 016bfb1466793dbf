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
#include <span>
#include <vector>

#include "bmv/fluctuations.hpp"
#include "bmv/model.hpp"

namespace bmv {

// Grid-evaluation kernels. Each OpenMP kernel writes results by grid
// index, so its output is identical to the serial reference for any
// thread count; the *_serial functions are the references kept for
// testing and for the benchmark.

/// Uniform grid with steps points including both endpoints; steps >= 2.
std::vector<double> linspace(double start, double stop, int steps);

/// Pointwise evaluation of an arbitrary scalar function over a grid.
std::vector<double> map_curve(std::span<const double> xs, const std::function<double(double)>& f);
std::vector<double> map_curve_serial(std::span<const double> xs,
                                     const std::function<double(double)>& f);

/// ppt_eigenvalue(omega, t) over a time grid.
std::vector<double> lambda_curve(double omega, std::span<const double> ts);
std::vector<double> lambda_curve_serial(double omega, std::span<const double> ts);

/// averaged_ppt_eigenvalue over a time grid (every t must exceed s_t^2).
std::vector<double> averaged_lambda_curve(double omega, const FluctuationSpec& spec,
                                          std::span<const double> ts);
std::vector<double> averaged_lambda_curve_serial(double omega, const FluctuationSpec& spec,
                                                 std::span<const double> ts);

/// Horodecki parameter of the evolved state over a time grid.
std::vector<double> horodecki_curve(double omega, std::span<const double> ts);
std::vector<double> horodecki_curve_serial(double omega, std::span<const double> ts);

/// optimal_interaction_time over a coupling grid (every omega > 1).
std::vector<double> optimal_time_curve(std::span<const double> omegas);
std::vector<double> optimal_time_curve_serial(std::span<const double> omegas);

/// max_time_jitter_variance over a coupling grid (every omega > 1).
std::vector<double> jitter_bound_curve(std::span<const double> omegas);
std::vector<double> jitter_bound_curve_serial(std::span<const double> omegas);

}  // namespace bmv
