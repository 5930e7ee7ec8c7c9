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

#include "frarir/ism.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "frarir/error.hpp"
#include "frarir/scene.hpp"

namespace frarir {

namespace {

double ImageCoordinate(int k, double dim, double src) {
  return k * dim + ((k % 2 == 0) ? src : dim - src);
}

double Distance(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace

double RoomStat(const ShoeboxRoom& room) {
  const double l = room.length, w = room.width, h = room.height;
  return (l * w * h) / (2.0 * (l * w + l * h + w * h));
}

void ValidateRoom(const ShoeboxRoom& room) {
  const Vec3 dims = room.Dims();
  for (int a = 0; a < 3; ++a) {
    if (!(dims[a] > 0)) throw DomainError("room dimensions must be positive");
    for (const Vec3* p : {&room.source, &room.mic}) {
      if (!((*p)[a] >= kWallMargin && (*p)[a] <= dims[a] - kWallMargin)) {
        throw DomainError("source and microphone must be at least 0.1 m from every wall");
      }
    }
  }
  if (!(room.t60 > 0)) throw DomainError("room t60 must be positive");
  if (room.max_order && *room.max_order < 0) {
    throw DomainError("max_order must be non-negative");
  }
}

int DefaultMaxOrder(const ShoeboxRoom& room, double sound_velocity) {
  const double min_dim = std::min({room.length, room.width, room.height});
  const double order = std::ceil(sound_velocity * room.t60 / min_dim);
  return static_cast<int>(std::min(order, double(kMaxOrderCap)));
}

int EffectiveMaxOrder(const ShoeboxRoom& room, double sound_velocity) {
  return room.max_order ? *room.max_order
                        : DefaultMaxOrder(room, sound_velocity);
}

std::vector<ImageSource> ImageExpansion(const ShoeboxRoom& room, int max_order) {
  std::vector<ImageSource> images;
  const int side = 2 * max_order + 1;
  images.reserve(static_cast<std::size_t>(side) * side * side);
  for (int kx = -max_order; kx <= max_order; ++kx) {
    for (int ky = -max_order; ky <= max_order; ++ky) {
      for (int kz = -max_order; kz <= max_order; ++kz) {
        images.push_back(
            {{ImageCoordinate(kx, room.length, room.source[0]),
              ImageCoordinate(ky, room.width, room.source[1]),
              ImageCoordinate(kz, room.height, room.source[2])},
             std::abs(kx) + std::abs(ky) + std::abs(kz)});
      }
    }
  }
  return images;
}

std::vector<SoundPath> ImagePaths(const ShoeboxRoom& room,
                                  double sound_velocity) {
  const int order = EffectiveMaxOrder(room, sound_velocity);
  const double max_travel = sound_velocity * room.t60;

  // Per-axis offsets from the microphone; the lattice is their outer product.
  const std::size_t side = 2 * static_cast<std::size_t>(order) + 1;
  const Vec3 dims = room.Dims();
  std::array<std::vector<double>, 3> sq;
  for (int a = 0; a < 3; ++a) {
    sq[a].resize(side);
    for (int k = -order; k <= order; ++k) {
      const double d = ImageCoordinate(k, dims[a], room.source[a]) - room.mic[a];
      sq[a][k + order] = d * d;
    }
  }

  std::vector<SoundPath> paths;
  const double limit = max_travel * max_travel;
  for (int kx = -order; kx <= order; ++kx) {
    for (int ky = -order; ky <= order; ++ky) {
      const double xy = sq[0][kx + order] + sq[1][ky + order];
      if (xy > limit) continue;
      for (int kz = -order; kz <= order; ++kz) {
        if (kx == 0 && ky == 0 && kz == 0) continue;
        const double d2 = xy + sq[2][kz + order];
        if (d2 > limit) continue;
        paths.push_back(
            {std::sqrt(d2), double(std::abs(kx) + std::abs(ky) + std::abs(kz))});
      }
    }
  }
  return paths;
}

RirPair IsmFilter(const ShoeboxRoom& room, const SimulationConfig& config,
                  const ResamplePipeline& pipeline) {
  ValidateRoom(room);
  const double room_stat = RoomStat(room);
  const double r = ReflectionCoefficient(room_stat, room.t60);
  const double direct = Distance(room.source, room.mic);
  const std::vector<SoundPath> paths = ImagePaths(room, config.sound_velocity);

  RirPair pair = SynthesizePair(direct, room.t60, r, paths, config, pipeline);
  SceneDraw& scene = pair.scene;
  scene.t60 = room.t60;
  scene.room_stat = room_stat;
  scene.reflection_coeff = r;
  scene.direct_dist = direct;
  scene.image_dists.reserve(paths.size());
  scene.reflection_counts.reserve(paths.size());
  for (const SoundPath& p : paths) {
    scene.image_dists.push_back(p.dist);
    scene.reflection_counts.push_back(p.reflections);
    scene.max_reflections = std::max(scene.max_reflections, p.reflections);
  }
  return pair;
}

RirPair IsmFilter(const ShoeboxRoom& room, const SimulationConfig& config) {
  return IsmFilter(room, config, ResamplePipeline(config));
}

ShoeboxRoom SampleShoeboxRoom(Rng& rng, const SimulationConfig& config) {
  ShoeboxRoom room;
  room.length = rng.Uniform(3.0, 12.0);
  room.width = rng.Uniform(3.0, 12.0);
  room.height = rng.Uniform(3.0, 4.0);
  room.t60 = rng.Uniform(config.t60_range.lo, config.t60_range.hi);
  const Vec3 dims = room.Dims();
  for (Vec3* p : {&room.source, &room.mic}) {
    for (int a = 0; a < 3; ++a) {
      (*p)[a] = rng.Uniform(kWallMargin, dims[a] - kWallMargin);
    }
  }
  return room;
}

}  // namespace frarir
