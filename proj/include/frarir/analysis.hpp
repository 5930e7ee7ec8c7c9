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

// Acoustic validation of impulse responses: Schroeder energy decay, T60 by
// line fit, direct-to-reverberant ratio and magnitude spectrograms.

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "frarir/config.hpp"

namespace frarir {

/// Default T20 fit segment, dB.
inline constexpr Interval kDefaultFitRangeDb{-25.0, -5.0};

/// Half-width of the direct-path region used by Drr, seconds.
inline constexpr double kDrrHalfWindowSeconds = 0.0025;

/// EDC[n] = 10 log10(sum_{m >= n} h[m]^2 / sum_m h[m]^2). Entries past the
/// last non-zero sample are -inf. Throws DomainError for an all-zero input.
std::vector<double> SchroederEdc(std::span<const double> filter);

/// Least-squares line through the EDC between the first samples at or below
/// fit_range_db.hi and fit_range_db.lo; T60 = -60 / slope.
/// Throws InsufficientDecayError if the EDC never reaches fit_range_db.lo or
/// the segment holds fewer than two finite points or a non-negative slope.
double EstimateT60(std::span<const double> edc_db, double rate,
                   const Interval& fit_range_db = kDefaultFitRangeDb);

/// Energy within +-kDrrHalfWindowSeconds of direct_index over the energy
/// elsewhere, in dB. +inf when there is no energy outside the window.
double Drr(std::span<const double> filter, std::size_t direct_index,
           double rate);

/// Row-major frames x bins magnitude matrix.
struct Spectrogram {
  std::size_t frames = 0;
  std::size_t bins = 0;
  std::size_t window = 0;
  std::size_t hop = 0;
  std::vector<double> magnitude;

  double At(std::size_t frame, std::size_t bin) const {
    return magnitude[frame * bins + bin];
  }
};

/// Periodic Hann window of the given length.
std::vector<double> HannWindow(std::size_t length);

/// |STFT| with a periodic Hann window and no padding: frames =
/// 1 + (n - window) / hop, bins = window / 2 + 1. Throws DomainError when
/// the signal is shorter than one window.
Spectrogram ComputeSpectrogram(std::span<const double> signal,
                               std::size_t window = 256, std::size_t hop = 64);

struct DecayAnalysis {
  std::vector<double> edc_db;
  /// Empty when the decay is insufficient for a fit.
  std::optional<double> estimated_t60;
  Interval fit_range_db = kDefaultFitRangeDb;
  double drr_db = 0.0;
  std::size_t direct_index = 0;
};

/// Direct index is taken as the position of the largest-magnitude sample.
DecayAnalysis Analyze(std::span<const double> filter, double rate);

/// One "index,time_s,edc_db" row per sample after a header line.
void WriteEdcCsv(std::ostream& os, std::span<const double> edc_db, double rate);

/// One row per frame: "frame,time_s" then one magnitude column per bin.
void WriteSpectrogramCsv(std::ostream& os, const Spectrogram& spec,
                         double rate);

}  // namespace frarir
