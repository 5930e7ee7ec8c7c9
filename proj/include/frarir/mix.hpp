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

// Noisy reverberant mixture simulation for speech enhancement training data.
//
// Seed streams derived from the mix seed:
//   DeriveSeed(seed, 0)      SNR draw (only when no SNR is requested)
//   DeriveSeed(seed, 1)      speech RIR
//   DeriveSeed(seed, 2 + j)  RIR of noise j

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frarir/config.hpp"
#include "frarir/scene.hpp"

namespace frarir {

inline constexpr double kMixMaxSeconds = 6.0;
inline constexpr Interval kMixSnrRangeDb{-8.0, 6.0};
inline constexpr std::size_t kMaxNoiseSources = 2;

struct MixResult {
  double sample_rate = 0.0;
  double snr_db = 0.0;
  bool snr_sampled = false;
  /// Applied to every output when the mixture would clip, else 1.
  double gain = 1.0;
  std::vector<double> mixture;
  /// Speech convolved with the early part of its RIR.
  std::vector<double> target;
  /// Reverberant speech and summed reverberant noise as they appear in the
  /// mixture (gain included).
  std::vector<double> speech;
  std::vector<double> noise;
  std::vector<SceneDraw> scenes;  // speech first, then one per noise
};

/// Energy-ratio SNR of two signals in dB.
double MeasureSnrDb(std::span<const double> speech, std::span<const double> noise);

/// Speech is truncated to kMixMaxSeconds; noises are looped or truncated to
/// the speech length. config.sample_rate is replaced by \p sample_rate.
MixResult MixSignals(std::span<const double> speech,
                     const std::vector<std::vector<double>>& noises,
                     double sample_rate, std::optional<double> snr_db,
                     std::uint64_t seed, SimulationConfig config);

}  // namespace frarir
