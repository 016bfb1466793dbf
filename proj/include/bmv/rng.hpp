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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace bmv {

// Reproducible random numbers. The generator is pinned down exactly so
// that a (seed, n) pair gives bit-identical results on every conforming
// platform and for any thread count:
//   - sub-stream seeds come from the SplitMix64 finalizer applied to
//     master_seed + (block_index + 1) * 0x9E3779B97F4A7C15 (counter-based
//     splitting, no sequential dependence between blocks);
//   - each sub-stream is a std::mt19937_64 (the engine's output sequence
//     is fully specified by the C++ standard);
//   - uniforms take the top 53 bits, mapped to (0, 1];
//   - normal pairs come from the Box-Muller transform.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t block_seed(std::uint64_t master_seed, std::uint64_t block_index) {
  return splitmix64(master_seed + block_index * 0x9E3779B97F4A7C15ULL);
}

struct GaussianPair {
  double z0 = 0.0;
  double z1 = 0.0;
};

class NormalPairStream {
 public:
  explicit NormalPairStream(std::uint64_t seed) : engine_(seed) {}

  GaussianPair next() {
    const double u1 = unit_interval();  // in (0, 1], so log(u1) is finite
    const double u2 = unit_interval();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  double unit_interval() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
};

}  // namespace bmv
