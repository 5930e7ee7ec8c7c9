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

#include "frarir/scene.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frarir/error.hpp"

namespace frarir {

double ReflectionCoefficient(double room_stat, double t60) {
  if (!(room_stat > 0) || !(t60 > 0) || !std::isfinite(room_stat) ||
      !std::isfinite(t60)) {
    throw DomainError("reflection coefficient needs positive room_stat and t60");
  }
  const double absorbed = 1.0 - std::exp(-0.16 * room_stat / t60);
  return std::sqrt(1.0 - absorbed * absorbed);
}

RoomDraw SampleRoom(Rng& rng, const SimulationConfig& config) {
  RoomDraw room;
  room.t60 = rng.Uniform(config.t60_range.lo, config.t60_range.hi);
  room.room_stat =
      rng.Uniform(config.room_stat_range.lo, config.room_stat_range.hi);
  room.reflection_coeff = ReflectionCoefficient(room.room_stat, room.t60);
  return room;
}

double SampleDirectDistance(Rng& rng, const SimulationConfig& config,
                            double t60) {
  const double max_travel = config.sound_velocity * t60;
  if (config.direct_range.lo >= max_travel) {
    throw DomainError("direct_range starts at " +
                      std::to_string(config.direct_range.lo) +
                      " m, beyond the c0*t60 travel distance " +
                      std::to_string(max_travel) + " m");
  }
  for (;;) {
    const double d0 = rng.Uniform(config.direct_range.lo, config.direct_range.hi);
    if (d0 < max_travel) return d0;
  }
}

double DistanceRatioFromUniform(double u, double alpha, double beta) {
  const double a3 = alpha * alpha * alpha;
  const double b3 = beta * beta * beta;
  return std::cbrt(u * (b3 - a3) + a3);
}

std::vector<double> SampleDistanceRatios(Rng& rng, int count, double alpha,
                                         double beta) {
  std::vector<double> ratios(static_cast<std::size_t>(std::max(count, 0)));
  for (auto& x : ratios) x = DistanceRatioFromUniform(rng.Uniform01(), alpha, beta);
  return ratios;
}

double RescaleRatio(double ratio, double alpha, double beta, double c0,
                    double t60, double d0) {
  const double span = c0 * t60 / d0;
  if (!(span > 1.0)) {
    throw DomainError("c0*t60 must exceed the direct distance");
  }
  if (!(beta > alpha)) {
    throw DomainError("distance-ratio rescaling needs alpha < beta");
  }
  if (alpha > 0.0) {
    return 1.0 + (alpha / (beta - alpha)) * (ratio / alpha - 1.0) * (span - 1.0);
  }
  // The factored form divides by alpha; this is the same affine map.
  return 1.0 + (ratio - alpha) / (beta - alpha) * (span - 1.0);
}

std::vector<double> RescaleRatios(std::span<const double> ratios, double alpha,
                                  double beta, double c0, double t60,
                                  double d0) {
  std::vector<double> out(ratios.size());
  std::transform(ratios.begin(), ratios.end(), out.begin(), [&](double x) {
    return RescaleRatio(x, alpha, beta, c0, t60, d0);
  });
  return out;
}

double MaxReflections(double c0, double t60, double d0,
                      double reflection_coeff) {
  if (!(c0 > 0) || !(t60 > 0) || !(d0 > 0)) {
    throw DomainError("max reflections needs positive c0, t60 and d0");
  }
  if (!(reflection_coeff > 0) || !(reflection_coeff < 1)) {
    throw DomainError("max reflections needs a reflection coefficient in (0, 1)");
  }
  const double raw = (std::log10(c0 * t60) - std::log10(d0) - 3.0) /
                     std::log10(reflection_coeff);
  return std::max(raw, 1.0);
}

double ReflectionCount(double image_dist, double c0, double t60, double rr_max,
                       double perturbation, double shrink_tau) {
  const double rel = image_dist / (c0 * t60);
  const double g = 1.0 + rel * rel * (rr_max - 1.0) +
                   perturbation * std::pow(image_dist, shrink_tau);
  return std::max(std::min(g, rr_max), 1.0);
}

std::vector<double> SampleReflectionCounts(Rng& rng,
                                           std::span<const double> image_dists,
                                           double c0, double t60,
                                           double rr_max,
                                           const Interval& perturb_range,
                                           double shrink_tau) {
  std::vector<double> counts(image_dists.size());
  for (std::size_t i = 0; i < image_dists.size(); ++i) {
    const double p = rng.Uniform(perturb_range.lo, perturb_range.hi);
    counts[i] = ReflectionCount(image_dists[i], c0, t60, rr_max, p, shrink_tau);
  }
  return counts;
}

SceneDraw SampleScene(const SimulationConfig& config, std::uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  const double c0 = config.sound_velocity;

  SceneDraw scene;
  scene.seed = seed;
  const RoomDraw room = SampleRoom(rng, config);
  scene.t60 = room.t60;
  scene.room_stat = room.room_stat;
  scene.reflection_coeff = room.reflection_coeff;
  scene.direct_dist = SampleDirectDistance(rng, config, scene.t60);

  const double d0 = scene.direct_dist;
  const double max_travel = c0 * scene.t60;
  const auto ratios =
      SampleDistanceRatios(rng, config.num_images, config.alpha, config.beta);
  scene.image_dists.resize(ratios.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    const double dr =
        RescaleRatio(ratios[i], config.alpha, config.beta, c0, scene.t60, d0);
    // DR * d0 can overshoot c0*t60 by an ulp at the upper endpoint.
    scene.image_dists[i] = std::clamp(dr * d0, d0, max_travel);
  }

  scene.max_reflections =
      MaxReflections(c0, scene.t60, d0, scene.reflection_coeff);
  scene.reflection_counts = SampleReflectionCounts(
      rng, scene.image_dists, c0, scene.t60, scene.max_reflections,
      config.perturb_range, config.shrink_tau);
  return scene;
}

}  // namespace frarir
