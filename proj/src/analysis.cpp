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

#include "frarir/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>

#include "frarir/error.hpp"
#include "frarir/fft.hpp"

namespace frarir {

std::vector<double> SchroederEdc(std::span<const double> filter) {
  std::vector<double> energy(filter.size());
  double acc = 0.0;
  for (std::size_t n = filter.size(); n-- > 0;) {
    acc += filter[n] * filter[n];
    energy[n] = acc;
  }
  if (filter.empty() || !(acc > 0.0)) {
    throw DomainError("energy decay curve of a silent filter");
  }
  const double total = acc;
  for (auto& e : energy) {
    e = e > 0.0 ? 10.0 * std::log10(e / total)
                : -std::numeric_limits<double>::infinity();
  }
  energy[0] = 0.0;
  return energy;
}

double EstimateT60(std::span<const double> edc_db, double rate,
                   const Interval& fit_range_db) {
  const auto first_below = [&](double level) {
    return std::find_if(edc_db.begin(), edc_db.end(),
                        [level](double v) { return v <= level; });
  };
  const auto start = first_below(fit_range_db.hi);
  const auto stop = first_below(fit_range_db.lo);
  if (stop == edc_db.end()) {
    throw InsufficientDecayError("energy decay never reaches " +
                                 std::to_string(fit_range_db.lo) + " dB");
  }

  // Ordinary least squares of level against time over [start, stop].
  double n = 0, st = 0, sl = 0, stt = 0, stl = 0;
  for (auto it = start; it <= stop; ++it) {
    if (!std::isfinite(*it)) continue;
    const double t = static_cast<double>(it - edc_db.begin()) / rate;
    n += 1;
    st += t;
    sl += *it;
    stt += t * t;
    stl += t * *it;
  }
  const double denom = n * stt - st * st;
  if (n < 2 || !(denom > 0)) {
    throw InsufficientDecayError("too few points in the decay fit segment");
  }
  const double slope = (n * stl - st * sl) / denom;
  if (!(slope < 0)) {
    throw InsufficientDecayError("energy decay fit has non-negative slope");
  }
  return -60.0 / slope;
}

double Drr(std::span<const double> filter, std::size_t direct_index,
           double rate) {
  const auto half = static_cast<long>(std::round(kDrrHalfWindowSeconds * rate));
  const long centre = static_cast<long>(direct_index);
  double direct = 0.0, reverberant = 0.0;
  for (std::size_t n = 0; n < filter.size(); ++n) {
    const double e = filter[n] * filter[n];
    if (std::abs(static_cast<long>(n) - centre) <= half) {
      direct += e;
    } else {
      reverberant += e;
    }
  }
  if (reverberant == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(direct / reverberant);
}

std::vector<double> HannWindow(std::size_t length) {
  std::vector<double> w(length);
  for (std::size_t n = 0; n < length; ++n) {
    w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / length);
  }
  return w;
}

Spectrogram ComputeSpectrogram(std::span<const double> signal,
                               std::size_t window, std::size_t hop) {
  if (window == 0 || hop == 0) {
    throw DomainError("spectrogram window and hop must be positive");
  }
  if (signal.size() < window) {
    throw DomainError("signal shorter than one spectrogram window");
  }
  Spectrogram spec;
  spec.window = window;
  spec.hop = hop;
  spec.frames = 1 + (signal.size() - window) / hop;
  spec.bins = window / 2 + 1;
  spec.magnitude.resize(spec.frames * spec.bins);

  const std::vector<double> w = HannWindow(window);
  RealFft fft(window);
  std::vector<double> frame(window);
  for (std::size_t f = 0; f < spec.frames; ++f) {
    for (std::size_t n = 0; n < window; ++n) {
      frame[n] = signal[f * hop + n] * w[n];
    }
    const auto bins = fft.Forward(frame);
    for (std::size_t k = 0; k < spec.bins; ++k) {
      spec.magnitude[f * spec.bins + k] = std::abs(bins[k]);
    }
  }
  return spec;
}

DecayAnalysis Analyze(std::span<const double> filter, double rate) {
  DecayAnalysis result;
  result.edc_db = SchroederEdc(filter);
  try {
    result.estimated_t60 = EstimateT60(result.edc_db, rate, result.fit_range_db);
  } catch (const InsufficientDecayError&) {
    result.estimated_t60.reset();
  }
  const auto peak = std::max_element(
      filter.begin(), filter.end(),
      [](double a, double b) { return std::abs(a) < std::abs(b); });
  result.direct_index = static_cast<std::size_t>(peak - filter.begin());
  result.drr_db = Drr(filter, result.direct_index, rate);
  return result;
}

void WriteEdcCsv(std::ostream& os, std::span<const double> edc_db,
                 double rate) {
  os << "index,time_s,edc_db\n" << std::setprecision(10);
  for (std::size_t n = 0; n < edc_db.size(); ++n) {
    os << n << ',' << n / rate << ',';
    if (std::isfinite(edc_db[n])) {
      os << edc_db[n];
    } else {
      os << "-inf";
    }
    os << '\n';
  }
}

void WriteSpectrogramCsv(std::ostream& os, const Spectrogram& spec,
                         double rate) {
  os << "frame,time_s";
  for (std::size_t k = 0; k < spec.bins; ++k) {
    os << ",bin" << k;
  }
  os << '\n' << std::setprecision(10);
  for (std::size_t f = 0; f < spec.frames; ++f) {
    os << f << ',' << static_cast<double>(f * spec.hop) / rate;
    for (std::size_t k = 0; k < spec.bins; ++k) {
      os << ',' << spec.At(f, k);
    }
    os << '\n';
  }
}

}  // namespace frarir
