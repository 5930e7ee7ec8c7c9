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

// Filter synthesis back end shared by the stochastic simulator and the
// shoebox image-source reference: high-rate dirac comb, early-reverberation
// window, and the decimate / 80 Hz high-pass / decimate chain.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frarir/config.hpp"
#include "frarir/dsp.hpp"
#include "frarir/scene.hpp"

namespace frarir {

struct RirFilter {
  double sample_rate = 0.0;
  std::vector<double> samples;
  std::size_t direct_index = 0;

  bool operator==(const RirFilter&) const = default;
};

struct RirPair {
  RirFilter full;
  RirFilter early;
  SceneDraw scene;
};

/// One reflected path: travel distance and (possibly fractional) number of
/// reflections.
struct SoundPath {
  double dist = 0.0;
  double reflections = 0.0;
};

/// ceil(t60 * rate); throws DomainError if the length is not representable.
std::size_t FilterLength(double t60, double rate);

/// Comb index of a path: min(ceil(dist / c0 * high_rate), length - 1).
std::size_t CombIndex(double dist, double sound_velocity, double high_rate,
                      std::size_t length);

/// Dirac comb at rate high_rate_factor * sample_rate, length
/// ceil(t60 * high_rate). The direct path contributes 1 / direct_dist; every
/// path adds r^reflections / dist at its CombIndex. Colliding taps sum in
/// path order.
RirFilter BuildComb(double direct_dist, double t60, double reflection_coeff,
                    std::span<const SoundPath> paths,
                    const SimulationConfig& config);
RirFilter BuildComb(const SceneDraw& scene, const SimulationConfig& config);

/// Inclusive comb-index range [lo, hi] of the early-reverberation window
/// around comb index `direct`, i.e. the early_window_ms interval with each
/// end rounded outward to whole samples. Not clipped to the filter length.
struct IndexWindow {
  long lo = 0;
  long hi = 0;
  bool Contains(long n) const { return n >= lo && n <= hi; }
};
IndexWindow EarlyWindowRange(long direct, double rate,
                             const SimulationConfig& config);

/// Copy of the comb with every sample outside EarlyWindowRange zeroed.
RirFilter EarlyWindow(const RirFilter& comb, const SimulationConfig& config);
RirFilter EarlyWindow(const RirFilter& comb, const SceneDraw& scene,
                      const SimulationConfig& config);

/// Decimators and high-pass for one configuration. Construction designs the
/// filters; Run is const and may be shared between threads.
class ResamplePipeline {
 public:
  explicit ResamplePipeline(const SimulationConfig& config);

  /// Decimate by high/mid, 80 Hz high-pass at the mid rate, decimate by
  /// mid_rate_factor, then trim or zero-pad to final_length. The direct index
  /// maps to round(comb.direct_index / high_rate_factor).
  RirFilter Run(const RirFilter& comb, std::size_t final_length) const;

  /// Same as Run followed by zeroing every output outside `keep`, but only
  /// computes what the kept outputs depend on.
  RirFilter Run(const RirFilter& comb, std::size_t final_length,
                const IndexWindow& keep) const;

  /// Worst-case spread, in final-rate samples, of a comb sample through both
  /// anti-alias filters (their half-lengths) plus one sample of index
  /// rounding.
  std::size_t TailMargin() const;

  const Decimator& first_stage() const { return first_; }
  const Decimator& second_stage() const { return second_; }

 private:
  std::size_t MapDirectIndex(std::size_t comb_index,
                             std::size_t final_length) const;

  SimulationConfig config_;
  Decimator first_;
  Decimator second_;
  Biquad highpass_;
};

/// Convenience wrapper that designs the filters on each call.
RirFilter ResampleToOutput(const RirFilter& comb, double t60,
                           const SimulationConfig& config);

/// Comb, early window and resampling for both filters, plus a final-rate
/// gate that zeroes the early filter outside the early window widened by
/// TailMargin(). The gate removes the infinite tail of the recursive
/// high-pass so the early filter has exactly zero energy past the window.
RirPair SynthesizePair(double direct_dist, double t60,
                       double reflection_coeff,
                       std::span<const SoundPath> paths,
                       const SimulationConfig& config,
                       const ResamplePipeline& pipeline);

/// Sample a scene and synthesize its filter pair. Pure in (config, seed).
RirPair Generate(const SimulationConfig& config, std::uint64_t seed);
RirPair Generate(const SimulationConfig& config, std::uint64_t seed,
                 const ResamplePipeline& pipeline);

/// Index range beyond which the final early filter is exactly zero.
IndexWindow EarlyOutputRange(const RirFilter& early,
                             const SimulationConfig& config,
                             std::size_t tail_margin);

}  // namespace frarir
