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

// Random scene sampling: room statistics, direct-path distance, virtual
// source distances and reflection counts.
//
// All draws of one scene come from a single Rng seeded with the scene seed,
// in this fixed order:
//   1. t60            Uniform(t60_range)
//   2. room_stat      Uniform(room_stat_range)
//   3. direct_dist    Uniform(direct_range), redrawn while >= c0 * t60
//   4. num_images uniforms driving the inverse-CDF distance-ratio sampler
//   5. num_images perturbations p_i ~ Uniform(perturb_range)

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frarir/config.hpp"
#include "frarir/random.hpp"

namespace frarir {

struct RoomDraw {
  double t60 = 0.0;
  double room_stat = 0.0;
  double reflection_coeff = 0.0;
};

/// One realized random scene.
struct SceneDraw {
  double t60 = 0.0;
  double room_stat = 0.0;
  double reflection_coeff = 0.0;
  double direct_dist = 0.0;
  /// Clamped maximum reflection count, always >= 1.
  double max_reflections = 1.0;
  std::vector<double> image_dists;
  std::vector<double> reflection_counts;
  std::uint64_t seed = 0;

  bool operator==(const SceneDraw&) const = default;
};

/// Eyring-style reflection coefficient sqrt(1 - (1 - exp(-0.16 R / T60))^2).
/// Throws DomainError unless both arguments are positive and finite.
double ReflectionCoefficient(double room_stat, double t60);

RoomDraw SampleRoom(Rng& rng, const SimulationConfig& config);

/// Rejection-samples d0 until d0 < c0 * t60. Throws DomainError when the
/// whole direct_range lies at or beyond c0 * t60.
double SampleDirectDistance(Rng& rng, const SimulationConfig& config,
                            double t60);

/// Inverse CDF of the density 3x^2 / (beta^3 - alpha^3) on [alpha, beta].
double DistanceRatioFromUniform(double u, double alpha, double beta);

/// count i.i.d. draws of the quadratic-density distance ratio.
/// alpha == beta yields a constant sequence.
std::vector<double> SampleDistanceRatios(Rng& rng, int count, double alpha,
                                         double beta);

/// Affine map of [alpha, beta] onto [1, c0 * t60 / d0].
/// Throws DomainError when c0 * t60 <= d0 or alpha >= beta.
double RescaleRatio(double ratio, double alpha, double beta, double c0,
                    double t60, double d0);
std::vector<double> RescaleRatios(std::span<const double> ratios, double alpha,
                                  double beta, double c0, double t60,
                                  double d0);

/// (log10(c0 t60) - log10(d0) - 3) / log10(r), clamped to >= 1.
double MaxReflections(double c0, double t60, double d0,
                      double reflection_coeff);

/// Reflection count of one image for a given perturbation p, clamped to
/// [1, rr_max].
double ReflectionCount(double image_dist, double c0, double t60, double rr_max,
                       double perturbation, double shrink_tau);

std::vector<double> SampleReflectionCounts(Rng& rng,
                                           std::span<const double> image_dists,
                                           double c0, double t60,
                                           double rr_max,
                                           const Interval& perturb_range,
                                           double shrink_tau);

/// Pure function of (config, seed).
SceneDraw SampleScene(const SimulationConfig& config, std::uint64_t seed);

}  // namespace frarir
