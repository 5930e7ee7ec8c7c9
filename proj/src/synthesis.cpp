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

#include "frarir/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frarir/error.hpp"

namespace frarir {

namespace {

// Keeps comb buffers well inside addressable memory and long arithmetic.
constexpr double kMaxFilterLength = 1u << 30;

std::size_t CeilDiv(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

std::size_t FilterLength(double t60, double rate) {
  const double n = std::ceil(t60 * rate);
  if (!(n >= 1.0) || !(n <= kMaxFilterLength)) {
    throw DomainError("filter length ceil(t60 * rate) = " + std::to_string(n) +
                      " is out of range");
  }
  return static_cast<std::size_t>(n);
}

std::size_t CombIndex(double dist, double sound_velocity, double high_rate,
                      std::size_t length) {
  const double q = std::ceil(dist / sound_velocity * high_rate);
  const double last = static_cast<double>(length - 1);
  return static_cast<std::size_t>(std::min(q, last));
}

RirFilter BuildComb(double direct_dist, double t60, double reflection_coeff,
                    std::span<const SoundPath> paths,
                    const SimulationConfig& config) {
  const double rate = config.HighRate();
  const double c0 = config.sound_velocity;
  RirFilter comb;
  comb.sample_rate = rate;
  comb.samples.assign(FilterLength(t60, rate), 0.0);
  const std::size_t length = comb.samples.size();

  comb.direct_index = CombIndex(direct_dist, c0, rate, length);
  comb.samples[comb.direct_index] += 1.0 / direct_dist;
  for (const SoundPath& p : paths) {
    comb.samples[CombIndex(p.dist, c0, rate, length)] +=
        std::pow(reflection_coeff, p.reflections) / p.dist;
  }
  return comb;
}

RirFilter BuildComb(const SceneDraw& scene, const SimulationConfig& config) {
  std::vector<SoundPath> paths(scene.image_dists.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    paths[i] = {scene.image_dists[i], scene.reflection_counts[i]};
  }
  return BuildComb(scene.direct_dist, scene.t60, scene.reflection_coeff, paths,
                   config);
}

IndexWindow EarlyWindowRange(long direct, double rate,
                             const SimulationConfig& config) {
  const double before = -config.early_window_ms.lo * rate / 1000.0;
  const double after = config.early_window_ms.hi * rate / 1000.0;
  return {direct - static_cast<long>(std::ceil(before)),
          direct + static_cast<long>(std::ceil(after))};
}

namespace {

RirFilter KeepWindow(const RirFilter& comb, const IndexWindow& w) {
  RirFilter early;
  early.sample_rate = comb.sample_rate;
  early.direct_index = comb.direct_index;
  early.samples.assign(comb.samples.size(), 0.0);
  const long size = static_cast<long>(comb.samples.size());
  const long lo = std::clamp(w.lo, 0L, size);
  const long hi = std::clamp(w.hi + 1, lo, size);
  std::copy(comb.samples.begin() + lo, comb.samples.begin() + hi,
            early.samples.begin() + lo);
  return early;
}

}  // namespace

RirFilter EarlyWindow(const RirFilter& comb, const SimulationConfig& config) {
  return KeepWindow(comb, EarlyWindowRange(static_cast<long>(comb.direct_index),
                                           comb.sample_rate, config));
}

RirFilter EarlyWindow(const RirFilter& comb, const SceneDraw& scene,
                      const SimulationConfig& config) {
  const std::size_t direct = CombIndex(scene.direct_dist, config.sound_velocity,
                                       comb.sample_rate, comb.samples.size());
  return KeepWindow(comb, EarlyWindowRange(static_cast<long>(direct),
                                           comb.sample_rate, config));
}

ResamplePipeline::ResamplePipeline(const SimulationConfig& config)
    : config_(config),
      first_(config.high_rate_factor / config.mid_rate_factor),
      second_(config.mid_rate_factor),
      highpass_(ButterworthHighpass(80.0, config.MidRate())) {
  config.Validate();
}

RirFilter ResamplePipeline::Run(const RirFilter& comb,
                                std::size_t final_length) const {
  std::vector<double> mid = first_.ProcessSparse(comb.samples);
  highpass_.Apply(mid);
  RirFilter out;
  out.sample_rate = config_.sample_rate;
  out.samples = second_.ProcessDense(mid);
  out.samples.resize(final_length, 0.0);
  out.direct_index = MapDirectIndex(comb.direct_index, final_length);
  return out;
}

RirFilter ResamplePipeline::Run(const RirFilter& comb, std::size_t final_length,
                                const IndexWindow& keep) const {
  RirFilter out;
  out.sample_rate = config_.sample_rate;
  out.direct_index = MapDirectIndex(comb.direct_index, final_length);
  const long last = std::min(keep.hi, static_cast<long>(final_length) - 1);
  if (last < 0 || keep.lo > last) {
    out.samples.assign(final_length, 0.0);
    return out;
  }
  // Causal high-pass plus finite decimator support: outputs up to `last`
  // depend only on this prefix of the mid-rate signal.
  const std::size_t outputs = static_cast<std::size_t>(last) + 1;
  const std::size_t mid_needed =
      outputs * second_.factor() + second_.half_length();
  std::vector<double> mid = first_.ProcessSparse(comb.samples, mid_needed);
  highpass_.Apply(std::span<double>(mid).first(std::min(mid.size(), mid_needed)));
  out.samples = second_.ProcessDense(mid, outputs);
  out.samples.resize(final_length, 0.0);
  for (long n = 0; n < static_cast<long>(final_length); ++n) {
    if (!keep.Contains(n)) out.samples[n] = 0.0;
  }
  return out;
}

std::size_t ResamplePipeline::MapDirectIndex(std::size_t comb_index,
                                             std::size_t final_length) const {
  const double mapped = std::round(static_cast<double>(comb_index) /
                                   config_.high_rate_factor);
  return std::min(static_cast<std::size_t>(mapped),
                  final_length == 0 ? 0 : final_length - 1);
}

std::size_t ResamplePipeline::TailMargin() const {
  const auto high = static_cast<std::size_t>(config_.high_rate_factor);
  const auto mid = static_cast<std::size_t>(config_.mid_rate_factor);
  return CeilDiv(first_.half_length(), high) +
         CeilDiv(second_.half_length(), mid) + 1;
}

RirFilter ResampleToOutput(const RirFilter& comb, double t60,
                           const SimulationConfig& config) {
  return ResamplePipeline(config).Run(
      comb, FilterLength(t60, config.sample_rate));
}

IndexWindow EarlyOutputRange(const RirFilter& early,
                             const SimulationConfig& config,
                             std::size_t tail_margin) {
  IndexWindow w = EarlyWindowRange(static_cast<long>(early.direct_index),
                                   early.sample_rate, config);
  w.lo -= static_cast<long>(tail_margin);
  w.hi += static_cast<long>(tail_margin);
  return w;
}

RirPair SynthesizePair(double direct_dist, double t60,
                       double reflection_coeff,
                       std::span<const SoundPath> paths,
                       const SimulationConfig& config,
                       const ResamplePipeline& pipeline) {
  const RirFilter comb =
      BuildComb(direct_dist, t60, reflection_coeff, paths, config);
  const RirFilter early_comb = EarlyWindow(comb, config);
  const std::size_t final_length = FilterLength(t60, config.sample_rate);

  RirPair pair;
  pair.full = pipeline.Run(comb, final_length);
  const IndexWindow gate =
      EarlyOutputRange(pair.full, config, pipeline.TailMargin());
  pair.early = pipeline.Run(early_comb, final_length, gate);
  return pair;
}

RirPair Generate(const SimulationConfig& config, std::uint64_t seed,
                 const ResamplePipeline& pipeline) {
  SceneDraw scene = SampleScene(config, seed);
  std::vector<SoundPath> paths(scene.image_dists.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    paths[i] = {scene.image_dists[i], scene.reflection_counts[i]};
  }
  RirPair pair = SynthesizePair(scene.direct_dist, scene.t60,
                                scene.reflection_coeff, paths, config, pipeline);
  pair.scene = std::move(scene);
  return pair;
}

RirPair Generate(const SimulationConfig& config, std::uint64_t seed) {
  return Generate(config, seed, ResamplePipeline(config));
}

}  // namespace frarir
