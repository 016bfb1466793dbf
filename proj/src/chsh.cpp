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

#include "bmv/chsh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bmv/dynamics.hpp"
#include "bmv/numeric.hpp"

namespace bmv {

namespace {

double sup_horodecki_impl(double omega, bool parallel) {
  const double t_max = 3.0;
  double step = 0.005;
  if (omega > 0.0) step = std::min(step, std::numbers::pi / (100.0 * omega));
  const int n = static_cast<int>(std::ceil(t_max / step));

  std::vector<double> ts(static_cast<std::size_t>(n));
  std::vector<double> values(static_cast<std::size_t>(n));
  const auto fill = [&](int i) {
    ts[static_cast<std::size_t>(i)] = t_max * (i + 1) / n;
    values[static_cast<std::size_t>(i)] = horodecki_parameter_at({omega, ts[static_cast<std::size_t>(i)]});
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) fill(i);
  } else {
    for (int i = 0; i < n; ++i) fill(i);
  }

  // Every local maximum of max(s1^2+s2^2, 2 s2^2) is an interior maximum
  // of one smooth branch, so golden refinement in a one-step bracket is
  // safe.
  double best = values[0];
  const auto m_at = [&](double t) { return horodecki_parameter_at({omega, t}); };
  for (int i = 0; i < n; ++i) {
    const double left = i > 0 ? values[static_cast<std::size_t>(i - 1)] : -1.0;
    const double right = i + 1 < n ? values[static_cast<std::size_t>(i + 1)] : -1.0;
    const double v = values[static_cast<std::size_t>(i)];
    best = std::max(best, v);
    if (v >= left && v >= right) {
      const double lo = i > 0 ? ts[static_cast<std::size_t>(i - 1)] : ts[0] / 2.0;
      const double hi = i + 1 < n ? ts[static_cast<std::size_t>(i + 1)] : t_max;
      best = std::max(best, m_at(golden_maximize(m_at, lo, hi)));
    }
  }
  return best;
}

}  // namespace

CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
  const Mat2 paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
  CorrelationMatrix tm;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Mat4 op = kron(paulis[i], paulis[j]);
      cxd trace = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) trace += rho.matrix()(a, b) * op(b, a);
      if (std::abs(trace.imag()) > 1e-12)
        throw std::invalid_argument("correlation_matrix: trace has imaginary residue");
      if (std::abs(trace.real()) > 1.0 + 1e-12)
        throw std::invalid_argument("correlation_matrix: entry outside [-1, 1]");
      tm.entries(i, j) = trace.real();
    }
  return tm;
}

ChshAssessment assess_chsh(const CorrelationMatrix& tm) {
  const std::array<double, 3> sv = singular_values(tm.entries);
  ChshAssessment a;
  a.horodecki_parameter = sv[0] * sv[0] + sv[1] * sv[1];
  a.max_chsh_value = 2.0 * std::sqrt(a.horodecki_parameter);
  a.violates_chsh = a.horodecki_parameter > 1.0;
  return a;
}

double horodecki_parameter_at(const SimPoint& point) {
  return assess_chsh(correlation_matrix(evolve_closed(point))).horodecki_parameter;
}

double sup_horodecki(double omega) { return sup_horodecki_impl(omega, true); }

double sup_horodecki_serial(double omega) { return sup_horodecki_impl(omega, false); }

ChshThreshold chsh_threshold() {
  double lo = 4.0;
  double hi = 4.5;
  const auto g = [](double omega) { return sup_horodecki(omega) - 1.0; };
  if (!(g(lo) < 0.0) || !(g(hi) > 0.0))
    throw std::runtime_error("chsh_threshold: bracket [4.0, 4.5] lost the sign change");
  for (int i = 0; i < 50; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  ChshThreshold result;
  result.omega_star = 0.5 * (lo + hi);
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.residual = g(result.omega_star);
  return result;
}

}  // namespace bmv
