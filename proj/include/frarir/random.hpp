// Copyright 2026 The fra-rir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace frarir {

/// Recorded in manifests so outputs can be traced to the generator.
inline constexpr const char* kRngAlgorithm = "mt19937_64/splitmix64-seed-split";

/// Seeded random stream for one scene. std::mt19937_64 output is fully
/// specified by the standard; the real-valued conversion is done here rather
/// than with std::uniform_real_distribution, whose algorithm is
/// implementation-defined, so draws are bit-identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi); returns lo exactly when lo == hi.
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer. A bijection on 64-bit words.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Per-job seed: seed_i = Mix64(run_seed + (i + 1) * 0x9e3779b97f4a7c15).
/// Distinct for distinct i within a run, independent of scheduling order.
constexpr std::uint64_t DeriveSeed(std::uint64_t run_seed, std::uint64_t index) {
  return Mix64(run_seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

}  // namespace frarir
