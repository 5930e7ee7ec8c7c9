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

// Per-filter timing of the stochastic simulator and the image-source
// reference.

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "frarir/config.hpp"

namespace frarir {

enum class Method { kFra, kIsm };

Method ParseMethod(const std::string& name);
const char* MethodName(Method method);

struct TimingSummary {
  std::size_t count = 0;
  int threads = 1;
  double min = 0, median = 0, p90 = 0, max = 0, mean = 0;
  double wall_seconds = 0;
  /// Filters per second of wall time.
  double throughput = 0;
};

/// Linear interpolation between closest ranks, q in [0, 1].
double Quantile(std::vector<double> values, double q);

TimingSummary Summarize(const std::vector<double>& seconds, double wall_seconds,
                        int threads);

/// Times `count` filter pairs (full + early). Job i uses DeriveSeed(seed, i):
/// as the scene seed for kFra, and to sample a shoebox room for kIsm. The
/// filter design is shared and done before timing starts.
TimingSummary RunBenchmark(Method method, std::size_t count, int threads,
                           const SimulationConfig& config, std::uint64_t seed);

void PrintSummary(std::ostream& os, Method method, const TimingSummary& s);

}  // namespace frarir
