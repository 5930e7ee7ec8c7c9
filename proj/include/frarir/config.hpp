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
#include <string>

#include "json.hpp"

namespace frarir {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double Width() const { return hi - lo; }
  bool Contains(double x) const { return x >= lo && x <= hi; }
  bool operator==(const Interval&) const = default;
};

/// All tunable hyperparameters and sampling ranges of the simulator.
struct SimulationConfig {
  double sample_rate = 16000.0;
  int high_rate_factor = 64;
  int mid_rate_factor = 8;
  Interval t60_range{0.1, 0.8};
  Interval room_stat_range{0.1, 1.2};
  Interval direct_range{0.2, 12.0};
  double alpha = 0.2;
  double beta = 1.0;
  Interval perturb_range{-2.0, 2.0};
  double shrink_tau = 0.2;
  double sound_velocity = 340.0;
  int num_images = 512;
  Interval early_window_ms{-6.0, 50.0};

  /// Rate of the dirac comb, high_rate_factor * sample_rate.
  double HighRate() const { return high_rate_factor * sample_rate; }
  /// Rate at which the 80 Hz high-pass runs, mid_rate_factor * sample_rate.
  double MidRate() const { return mid_rate_factor * sample_rate; }

  /// Throws ConfigError naming the first violated invariant.
  void Validate() const;

  bool operator==(const SimulationConfig&) const = default;
};

/// Flat JSON object keyed by field name; intervals are two-element arrays.
nlohmann::json ToJson(const SimulationConfig& config);

/// Missing fields keep their defaults, unknown fields throw ConfigError.
/// The result is validated.
SimulationConfig ConfigFromJson(const nlohmann::json& j);

SimulationConfig LoadConfig(const std::string& path);

}  // namespace frarir
