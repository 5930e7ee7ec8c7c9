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

// Shoebox image-source reference simulator. Virtual sources are enumerated
// explicitly and fed through the same synthesis back end as the stochastic
// simulator.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "frarir/config.hpp"
#include "frarir/random.hpp"
#include "frarir/synthesis.hpp"

namespace frarir {

using Vec3 = std::array<double, 3>;

/// Walls of an empty rectangular room lie on the planes x = 0, x = length,
/// y = 0, y = width, z = 0, z = height.
struct ShoeboxRoom {
  double length = 0.0;
  double width = 0.0;
  double height = 0.0;
  Vec3 source{};
  Vec3 mic{};
  double t60 = 0.0;
  /// Per-axis reflection order; unset selects DefaultMaxOrder.
  std::optional<int> max_order;

  Vec3 Dims() const { return {length, width, height}; }
};

inline constexpr double kWallMargin = 0.1;
inline constexpr int kMaxOrderCap = 20;

struct ImageSource {
  Vec3 position{};
  int reflections = 0;
};

/// Volume over total wall area, l*w*h / (2 (lw + lh + wh)).
double RoomStat(const ShoeboxRoom& room);

/// Throws DomainError for non-positive dimensions or t60, or positions
/// closer than kWallMargin to a wall.
void ValidateRoom(const ShoeboxRoom& room);

/// Smallest order N such that every image needing more than N reflections
/// along some axis lies beyond c0 * t60 (N * min_dim >= c0 * t60), capped at
/// kMaxOrderCap.
int DefaultMaxOrder(const ShoeboxRoom& room, double sound_velocity);

int EffectiveMaxOrder(const ShoeboxRoom& room, double sound_velocity);

/// Full (2N + 1)^3 lattice. Along each axis image k in [-N, N] sits at
/// k * L + s for even k and k * L + (L - s) for odd k, with |k| reflections.
/// Ordered by x index, then y, then z, each ascending.
std::vector<ImageSource> ImageExpansion(const ShoeboxRoom& room, int max_order);

/// Reflected paths (every image except the direct one) whose distance to the
/// microphone is at most c0 * t60, in ImageExpansion order.
std::vector<SoundPath> ImagePaths(const ShoeboxRoom& room,
                                  double sound_velocity);

RirPair IsmFilter(const ShoeboxRoom& room, const SimulationConfig& config);
RirPair IsmFilter(const ShoeboxRoom& room, const SimulationConfig& config,
                  const ResamplePipeline& pipeline);

/// Dimensions uniform in [3, 12] x [3, 12] x [3, 4] m, t60 uniform in the
/// config's t60_range, source and microphone uniform inside the room with
/// kWallMargin clearance.
ShoeboxRoom SampleShoeboxRoom(Rng& rng, const SimulationConfig& config);

}  // namespace frarir
