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

#include "frarir/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "frarir/error.hpp"

namespace frarir {

namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void RequireInterval(const Interval& i, const char* name) {
  Require(std::isfinite(i.lo) && std::isfinite(i.hi),
          std::string(name) + " must be finite");
  Require(i.lo <= i.hi, std::string(name) + " lower bound exceeds upper bound");
}

nlohmann::json IntervalJson(const Interval& i) { return {i.lo, i.hi}; }

Interval IntervalFrom(const nlohmann::json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ConfigError(key + " must be a two-element numeric array");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double NumberFrom(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError(key + " must be a number");
  return j.get<double>();
}

int IntegerFrom(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError(key + " must be an integer");
  return j.get<int>();
}

}  // namespace

void SimulationConfig::Validate() const {
  Require(std::isfinite(sample_rate) && sample_rate > 0,
          "sample_rate must be positive");
  Require(high_rate_factor >= 1 && mid_rate_factor >= 1,
          "rate factors must be >= 1");
  Require(high_rate_factor % mid_rate_factor == 0,
          "high_rate_factor must be divisible by mid_rate_factor");
  Require(MidRate() > 160.0, "mid rate must exceed 160 Hz for the 80 Hz high-pass");
  RequireInterval(t60_range, "t60_range");
  RequireInterval(room_stat_range, "room_stat_range");
  RequireInterval(direct_range, "direct_range");
  RequireInterval(perturb_range, "perturb_range");
  RequireInterval(early_window_ms, "early_window_ms");
  Require(t60_range.lo > 0, "t60_range must be positive");
  Require(room_stat_range.lo > 0, "room_stat_range must be positive");
  Require(direct_range.lo > 0, "direct_range must be positive");
  Require(0.0 <= alpha && alpha < beta && beta <= 1.0,
          "require 0 <= alpha < beta <= 1");
  Require(std::isfinite(shrink_tau) && shrink_tau > 0,
          "shrink_tau must be positive");
  Require(std::isfinite(sound_velocity) && sound_velocity > 0,
          "sound_velocity must be positive");
  Require(num_images >= 1, "num_images must be >= 1");
}

nlohmann::json ToJson(const SimulationConfig& c) {
  return {
      {"sample_rate", c.sample_rate},
      {"high_rate_factor", c.high_rate_factor},
      {"mid_rate_factor", c.mid_rate_factor},
      {"t60_range", IntervalJson(c.t60_range)},
      {"room_stat_range", IntervalJson(c.room_stat_range)},
      {"direct_range", IntervalJson(c.direct_range)},
      {"alpha", c.alpha},
      {"beta", c.beta},
      {"perturb_range", IntervalJson(c.perturb_range)},
      {"shrink_tau", c.shrink_tau},
      {"sound_velocity", c.sound_velocity},
      {"num_images", c.num_images},
      {"early_window_ms", IntervalJson(c.early_window_ms)},
  };
}

SimulationConfig ConfigFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  SimulationConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "sample_rate") {
      c.sample_rate = NumberFrom(value, key);
    } else if (key == "high_rate_factor") {
      c.high_rate_factor = IntegerFrom(value, key);
    } else if (key == "mid_rate_factor") {
      c.mid_rate_factor = IntegerFrom(value, key);
    } else if (key == "t60_range") {
      c.t60_range = IntervalFrom(value, key);
    } else if (key == "room_stat_range") {
      c.room_stat_range = IntervalFrom(value, key);
    } else if (key == "direct_range") {
      c.direct_range = IntervalFrom(value, key);
    } else if (key == "alpha") {
      c.alpha = NumberFrom(value, key);
    } else if (key == "beta") {
      c.beta = NumberFrom(value, key);
    } else if (key == "perturb_range") {
      c.perturb_range = IntervalFrom(value, key);
    } else if (key == "shrink_tau") {
      c.shrink_tau = NumberFrom(value, key);
    } else if (key == "sound_velocity") {
      c.sound_velocity = NumberFrom(value, key);
    } else if (key == "num_images") {
      c.num_images = IntegerFrom(value, key);
    } else if (key == "early_window_ms") {
      c.early_window_ms = IntervalFrom(value, key);
    } else {
      throw ConfigError("unknown config field '" + key + "'");
    }
  }
  c.Validate();
  return c;
}

SimulationConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("malformed config file " + path + ": " + e.what());
  }
  return ConfigFromJson(j);
}

}  // namespace frarir
