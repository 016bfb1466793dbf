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

// Times each OpenMP kernel against its serial reference and checks that
// the two produce identical bits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bmv/chsh.hpp"
#include "bmv/fluctuations.hpp"
#include "bmv/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn) {
  // one warmup, then best of three
  fn();
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
              serial_ms / parallel_ms, identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  using namespace bmv;

  {
    const auto ts = linspace(0.0, 5.0, 4000000);
    std::vector<double> a, b;
    const double s = time_ms([&] { a = lambda_curve_serial(3.0, ts); });
    const double p = time_ms([&] { b = lambda_curve(3.0, ts); });
    report("lambda_curve (4e6 pts)", s, p, a == b);
  }
  {
    const FluctuationSpec spec{0.05, 0.1};
    const auto ts = linspace(0.01, 4.0, 2000000);
    std::vector<double> a, b;
    const double s = time_ms([&] { a = averaged_lambda_curve_serial(3.0, spec, ts); });
    const double p = time_ms([&] { b = averaged_lambda_curve(3.0, spec, ts); });
    report("averaged_lambda (2e6 pts)", s, p, a == b);
  }
  {
    const auto ts = linspace(0.0, 3.0, 20000);
    std::vector<double> a, b;
    const double s = time_ms([&] { a = horodecki_curve_serial(4.2, ts); });
    const double p = time_ms([&] { b = horodecki_curve(4.2, ts); });
    report("horodecki_curve (2e4 pts)", s, p, a == b);
  }
  {
    const auto omegas = linspace(1.01, 50.0, 4000);
    std::vector<double> a, b;
    const double s = time_ms([&] { a = optimal_time_curve_serial(omegas); });
    const double p = time_ms([&] { b = optimal_time_curve(omegas); });
    report("optimal_time_curve (4e3)", s, p, a == b);
  }
  {
    const SimPoint point{2.0, 1.0};
    const FluctuationSpec spec{0.05, 0.1};
    MonteCarloResult a, b;
    const double s = time_ms([&] { a = monte_carlo_average_serial(point, spec, 4000000, 1); });
    const double p = time_ms([&] { b = monte_carlo_average(point, spec, 4000000, 1); });
    const bool same = max_abs_diff(a.mean, b.mean) == 0.0 &&
                      max_abs_diff(a.std_error, b.std_error) == 0.0 &&
                      a.clamped_samples == b.clamped_samples;
    report("monte_carlo (4e6 draws)", s, p, same);
  }
  {
    double a = 0.0, b = 0.0;
    const double s = time_ms([&] { a = sup_horodecki_serial(4.2); });
    const double p = time_ms([&] { b = sup_horodecki(4.2); });
    report("sup_horodecki (one omega)", s, p, a == b);
  }
  return 0;
}
