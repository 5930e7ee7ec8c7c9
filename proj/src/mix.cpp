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

#include "frarir/mix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "frarir/convolve.hpp"
#include "frarir/error.hpp"
#include "frarir/random.hpp"
#include "frarir/synthesis.hpp"

namespace frarir {

namespace {

double Energy(std::span<const double> x) {
  return std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
}

std::vector<double> Reverberate(std::span<const double> dry,
                                const std::vector<double>& rir, std::size_t n) {
  std::vector<double> wet = Convolve(dry, rir);
  wet.resize(n, 0.0);
  return wet;
}

std::vector<double> LoopTo(std::span<const double> x, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i % x.size()];
  return out;
}

}  // namespace

double MeasureSnrDb(std::span<const double> speech, std::span<const double> noise) {
  return 10.0 * std::log10(Energy(speech) / Energy(noise));
}

MixResult MixSignals(std::span<const double> speech,
                     const std::vector<std::vector<double>>& noises,
                     double sample_rate, std::optional<double> snr_db,
                     std::uint64_t seed, SimulationConfig config) {
  if (noises.empty() || noises.size() > kMaxNoiseSources) {
    throw ConfigError("mix needs one or two noise signals");
  }
  config.sample_rate = sample_rate;
  config.Validate();

  MixResult out;
  out.sample_rate = sample_rate;
  if (snr_db) {
    out.snr_db = *snr_db;
  } else {
    Rng rng(DeriveSeed(seed, 0));
    out.snr_db = rng.Uniform(kMixSnrRangeDb.lo, kMixSnrRangeDb.hi);
    out.snr_sampled = true;
  }
  if (!std::isfinite(out.snr_db)) throw DomainError("SNR must be finite");

  const auto max_len = static_cast<std::size_t>(std::llround(kMixMaxSeconds * sample_rate));
  const std::size_t n = std::min(speech.size(), max_len);
  const std::span<const double> dry = speech.first(n);
  if (n == 0 || Energy(dry) == 0.0) throw DomainError("speech input is silent");

  const ResamplePipeline pipeline(config);
  const RirPair speech_rir = Generate(config, DeriveSeed(seed, 1), pipeline);
  out.scenes.push_back(speech_rir.scene);
  out.speech = Reverberate(dry, speech_rir.full.samples, n);
  out.target = Reverberate(dry, speech_rir.early.samples, n);

  out.noise.assign(n, 0.0);
  for (std::size_t j = 0; j < noises.size(); ++j) {
    if (Energy(noises[j]) == 0.0) {
      throw DomainError("noise input " + std::to_string(j) + " is silent");
    }
    const RirPair rir = Generate(config, DeriveSeed(seed, 2 + j), pipeline);
    out.scenes.push_back(rir.scene);
    const std::vector<double> wet = Reverberate(LoopTo(noises[j], n), rir.full.samples, n);
    for (std::size_t i = 0; i < n; ++i) out.noise[i] += wet[i];
  }

  const double es = Energy(out.speech);
  const double en = Energy(out.noise);
  if (es == 0.0) throw DomainError("reverberant speech is silent");
  if (en == 0.0) throw DomainError("reverberant noise is silent");
  const double noise_scale = std::sqrt(es / (en * std::pow(10.0, out.snr_db / 10.0)));
  for (double& v : out.noise) v *= noise_scale;

  out.mixture.resize(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.mixture[i] = out.speech[i] + out.noise[i];
    peak = std::max(peak, std::abs(out.mixture[i]));
  }
  if (peak > 1.0) {
    out.gain = 1.0 / peak;
    for (auto* signal : {&out.mixture, &out.target, &out.speech, &out.noise}) {
      for (double& v : *signal) v *= out.gain;
    }
  }
  return out;
}

}  // namespace frarir
