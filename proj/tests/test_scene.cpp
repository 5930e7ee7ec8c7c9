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

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "doctest.h"
#include "frarir/error.hpp"
#include "frarir/random.hpp"
#include "frarir/scene.hpp"

namespace frarir {
namespace {

// Largest distance between the empirical CDF of \p x and the cubic CDF.
double KsDistanceCubic(std::vector<double> x, double alpha, double beta) {
  std::sort(x.begin(), x.end());
  const double a3 = alpha * alpha * alpha, b3 = beta * beta * beta;
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = (x[i] * x[i] * x[i] - a3) / (b3 - a3);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double UlpDistance(double a, double b) {
  return std::abs(a - b) / (std::nextafter(std::max(a, b), INFINITY) - std::max(a, b));
}

}  // namespace

TEST_CASE("reflection coefficient matches high-precision evaluations") {
  // 40-digit reference values of sqrt(1 - (1 - exp(-0.16 R / T))^2).
  CHECK(ReflectionCoefficient(0.2, 0.5) ==
        doctest::Approx(0.99807645995525570705).epsilon(1e-15));
  CHECK(ReflectionCoefficient(1.2, 0.1) ==
        doctest::Approx(0.52126799529187513229).epsilon(1e-15));
  CHECK(ReflectionCoefficient(1e-12, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reflection coefficient is monotone in room_stat and t60") {
  for (double t60 = 0.1; t60 <= 0.8; t60 += 0.05) {
    double prev = 1.0;
    for (double r = 0.1; r <= 1.2; r += 0.05) {
      const double c = ReflectionCoefficient(r, t60);
      CHECK(c > 0.0);
      CHECK(c < prev);
      CHECK(ReflectionCoefficient(r, t60 + 0.05) > c);
      prev = c;
    }
  }
}

TEST_CASE("reflection coefficient rejects non-positive inputs") {
  CHECK_THROWS_AS(ReflectionCoefficient(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(ReflectionCoefficient(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(ReflectionCoefficient(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(ReflectionCoefficient(NAN, 0.5), DomainError);
}

TEST_CASE("distance ratio inverse CDF") {
  CHECK(DistanceRatioFromUniform(0.0, 0.2, 1.0) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(DistanceRatioFromUniform(1.0, 0.2, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // Cube root of 0.504.
  CHECK(DistanceRatioFromUniform(0.5, 0.2, 1.0) ==
        doctest::Approx(0.79581144157927837193).epsilon(1e-15));
  CHECK(DistanceRatioFromUniform(0.0, 0.0, 1.0) == 0.0);
}

TEST_CASE("distance ratios follow the cubic CDF") {
  const std::pair<double, double> cases[] = {{0.0, 1.0}, {0.2, 1.0}, {0.3, 0.4}};
  std::uint64_t seed = 11;
  for (const auto& [alpha, beta] : cases) {
    Rng rng(seed++);
    const auto x = SampleDistanceRatios(rng, 100000, alpha, beta);
    for (double v : x) {
      REQUIRE(v >= alpha);
      REQUIRE(v <= beta);
    }
    CHECK(KsDistanceCubic(x, alpha, beta) < 0.01);
  }
}

TEST_CASE("rescaling maps the ratio interval onto [1, c0 t60 / d0]") {
  CHECK(RescaleRatio(0.6, 0.2, 1.0, 340.0, 0.5, 1.0) == doctest::Approx(85.5).epsilon(1e-14));

  const double c0 = 340.0;
  for (double alpha : {0.0, 0.1, 0.2, 0.5}) {
    for (double d0 : {0.2, 1.7, 11.9}) {
      const double t60 = 0.45;
      const double span = c0 * t60 / d0;
      CHECK(UlpDistance(RescaleRatio(alpha, alpha, 1.0, c0, t60, d0), 1.0) <= 4);
      CHECK(UlpDistance(RescaleRatio(1.0, alpha, 1.0, c0, t60, d0), span) <= 4);
      double prev = 0.0;
      for (int k = 0; k <= 20; ++k) {
        const double x = alpha + (1.0 - alpha) * k / 20.0;
        const double y = RescaleRatio(x, alpha, 1.0, c0, t60, d0);
        CHECK(y > prev);
        prev = y;
      }
      // Affine: the midpoint maps to the midpoint.
      CHECK(RescaleRatio((alpha + 1.0) / 2, alpha, 1.0, c0, t60, d0) ==
            doctest::Approx((1.0 + span) / 2).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(RescaleRatio(0.5, 0.2, 1.0, 340.0, 0.01, 3.4), DomainError);
  CHECK_THROWS_AS(RescaleRatio(0.5, 0.6, 0.6, 340.0, 0.5, 1.0), DomainError);
}

TEST_CASE("max reflections") {
  CHECK(MaxReflections(340.0, 0.5, 1.0, 0.9) ==
        doctest::Approx(16.818035018797407335).epsilon(1e-14));
  // Rooms where the 60 dB distance rule already exceeds 1000 d0 clamp to 1.
  CHECK(MaxReflections(340.0, 0.8, 0.2, 0.9) == 1.0);
  CHECK(MaxReflections(340.0, 0.5, 1.0, 1.0 - 1e-12) > 1e9);
  CHECK_THROWS_AS(MaxReflections(340.0, 0.5, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(MaxReflections(340.0, 0.5, 1.0, 0.0), DomainError);
}

TEST_CASE("reflection count") {
  CHECK(ReflectionCount(170.0, 340.0, 0.5, 16.82, 0.0, 0.2) ==
        doctest::Approx(16.82).epsilon(1e-14));
  CHECK(ReflectionCount(1e-9, 340.0, 0.5, 16.82, 0.0, 0.2) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ReflectionCount(10.0, 340.0, 0.5, 16.82, 1.5, 0.2) ==
        doctest::Approx(3.4320802731207359717).epsilon(1e-14));
  CHECK(ReflectionCount(10.0, 340.0, 0.5, 16.82, -100.0, 0.2) == 1.0);
  CHECK(ReflectionCount(160.0, 340.0, 0.5, 16.82, 2.0, 0.2) == 16.82);
}

TEST_CASE("room and direct distance stay in range") {
  SimulationConfig config;
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const RoomDraw room = SampleRoom(rng, config);
    CHECK(config.t60_range.Contains(room.t60));
    CHECK(config.room_stat_range.Contains(room.room_stat));
    CHECK(room.reflection_coeff == ReflectionCoefficient(room.room_stat, room.t60));
    const double d0 = SampleDirectDistance(rng, config, room.t60);
    CHECK(config.direct_range.Contains(d0));
    CHECK(d0 < config.sound_velocity * room.t60);
  }

  // A tiny t60 forces the rejection loop to do real work.
  config.t60_range = {0.001, 0.002};
  for (int i = 0; i < 200; ++i) {
    const RoomDraw room = SampleRoom(rng, config);
    CHECK(SampleDirectDistance(rng, config, room.t60) < config.sound_velocity * room.t60);
  }
  config.direct_range = {0.7, 1.0};
  CHECK_THROWS_AS(SampleDirectDistance(rng, config, 0.002), DomainError);
}

TEST_CASE("scene invariants over many seeds") {
  const SimulationConfig config;
  const double c0 = config.sound_velocity;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const SceneDraw scene = SampleScene(config, DeriveSeed(99, s));
    const double max_travel = c0 * scene.t60;
    REQUIRE(scene.image_dists.size() == static_cast<std::size_t>(config.num_images));
    REQUIRE(scene.reflection_counts.size() == scene.image_dists.size());
    CHECK(scene.direct_dist < max_travel);
    CHECK(scene.reflection_coeff > 0.0);
    CHECK(scene.reflection_coeff < 1.0);
    CHECK(scene.max_reflections >= 1.0);
    for (std::size_t i = 0; i < scene.image_dists.size(); ++i) {
      CHECK(scene.image_dists[i] >= scene.direct_dist);
      CHECK(scene.image_dists[i] <= max_travel);
      CHECK(scene.reflection_counts[i] >= 1.0);
      CHECK(scene.reflection_counts[i] <= scene.max_reflections);
    }
  }
}

TEST_CASE("scenes are deterministic in the seed") {
  const SimulationConfig config;
  CHECK(SampleScene(config, 1234) == SampleScene(config, 1234));
  CHECK_FALSE(SampleScene(config, 1234) == SampleScene(config, 1235));
}

TEST_CASE("seed splitting gives distinct seeds") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 100000; ++i) seen.insert(DeriveSeed(42, i));
  CHECK(seen.size() == 100000);
  CHECK(DeriveSeed(42, 0) != DeriveSeed(43, 0));
  static_assert(Mix64(0) == 0);
}

TEST_CASE("uniform draws are in [0, 1) and use the documented conversion") {
  Rng a(77);
  std::mt19937_64 engine(77);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.Uniform01();
    CHECK(u == static_cast<double>(engine() >> 11) / 9007199254740992.0);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

}  // namespace frarir
