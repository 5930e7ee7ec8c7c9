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

#include "frarir/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "frarir/error.hpp"

namespace frarir {

double KaiserBeta(double attenuation_db) {
  if (attenuation_db > 50.0) return 0.1102 * (attenuation_db - 8.7);
  if (attenuation_db >= 21.0) {
    return 0.5842 * std::pow(attenuation_db - 21.0, 0.4) +
           0.07886 * (attenuation_db - 21.0);
  }
  return 0.0;
}

std::vector<double> KaiserLowpass(int half_length, double cutoff,
                                  double kaiser_beta) {
  const double pi = std::numbers::pi;
  const double norm = std::cyl_bessel_i(0.0, kaiser_beta);
  std::vector<double> taps(2 * static_cast<std::size_t>(half_length) + 1);
  for (int j = -half_length; j <= half_length; ++j) {
    const double x = 2.0 * cutoff * j;
    const double sinc = j == 0 ? 1.0 : std::sin(pi * x) / (pi * x);
    const double ratio = half_length == 0 ? 0.0 : double(j) / half_length;
    const double window =
        std::cyl_bessel_i(0.0, kaiser_beta * std::sqrt(1.0 - ratio * ratio)) /
        norm;
    taps[j + half_length] = 2.0 * cutoff * sinc * window;
  }
  const double gain = std::accumulate(taps.begin(), taps.end(), 0.0);
  for (auto& t : taps) t /= gain;
  return taps;
}

Decimator::Decimator(int factor) : factor_(factor) {
  if (factor < 1) throw DomainError("decimation factor must be >= 1");
  if (factor == 1) {
    half_length_ = 0;
    taps_ = {1.0};
    return;
  }
  // Cut-off halfway through the transition band [0.8, 1.0] * output Nyquist.
  const double out_nyquist = 0.5 / factor;
  const double transition = 0.2 * out_nyquist;
  const double cutoff = 0.9 * out_nyquist;
  const double delta_omega = 2.0 * std::numbers::pi * transition;
  // Kaiser's order and beta formulas undershoot the target by up to about
  // half a dB, so design for one dB more.
  const double design_db = kDecimatorStopbandDb + 1.0;
  const double order = (design_db - 8.0) / (2.285 * delta_omega);
  half_length_ = static_cast<int>(std::ceil(order / 2.0));
  taps_ = KaiserLowpass(half_length_, cutoff, KaiserBeta(design_db));
}

std::size_t Decimator::OutputLength(std::size_t input_length) const {
  return (input_length + factor_ - 1) / factor_;
}

std::vector<double> Decimator::ProcessDense(std::span<const double> input,
                                            std::size_t output_limit) const {
  const std::size_t n = input.size();
  std::vector<double> out(OutputLength(n), 0.0);
  const long h = half_length_;
  const long len = static_cast<long>(n);
  const double* x = input.data();
  const double* tap = taps_.data() + h;  // tap[j] for j in [-h, h], symmetric
  const std::size_t count = std::min(out.size(), output_limit);
  for (std::size_t m = 0; m < count; ++m) {
    const long centre = static_cast<long>(m) * factor_;
    if (centre >= h && centre + h < len) {
      // Interior: fold the symmetric taps, four partial sums.
      const double* c = x + centre;
      double acc0 = tap[0] * c[0], acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
      long j = 1;
      for (; j + 3 <= h; j += 4) {
        acc0 += tap[j] * (c[-j] + c[j]);
        acc1 += tap[j + 1] * (c[-j - 1] + c[j + 1]);
        acc2 += tap[j + 2] * (c[-j - 2] + c[j + 2]);
        acc3 += tap[j + 3] * (c[-j - 3] + c[j + 3]);
      }
      for (; j <= h; ++j) acc0 += tap[j] * (c[-j] + c[j]);
      out[m] = (acc0 + acc1) + (acc2 + acc3);
      continue;
    }
    // out[m] = sum_j tap[j] * x[centre - j], clipped to the signal.
    const long j_lo = std::max(-h, centre - (len - 1));
    const long j_hi = std::min(h, centre);
    double acc = 0.0;
    for (long j = j_lo; j <= j_hi; ++j) acc += tap[j] * x[centre - j];
    out[m] = acc;
  }
  return out;
}

std::vector<double> Decimator::ProcessSparse(std::span<const double> input,
                                             std::size_t output_limit) const {
  const std::size_t n = input.size();
  std::vector<double> out(OutputLength(n), 0.0);
  if (out.empty() || output_limit == 0) return out;
  const long h = half_length_;
  const long last =
      static_cast<long>(std::min(out.size(), output_limit)) - 1;
  // Input samples past this index only reach outputs beyond `last`.
  const std::size_t scan_end =
      std::min(n, static_cast<std::size_t>(last * factor_ + h + 1));
  for (std::size_t i = 0; i < scan_end; ++i) {
    const double x = input[i];
    if (x == 0.0) continue;
    const long pos = static_cast<long>(i);
    // Outputs m with |m * factor - pos| <= h.
    const long m_lo = std::max(0L, (pos - h + factor_ - 1) / factor_);
    const long m_hi = std::min(last, (pos + h) / factor_);
    for (long m = m_lo; m <= m_hi; ++m) {
      out[m] += x * taps_[m * factor_ - pos + h];
    }
  }
  return out;
}

void Biquad::Apply(std::span<double> signal) const {
  double s1 = 0.0, s2 = 0.0;  // transposed direct form II state
  for (auto& x : signal) {
    const double y = b0 * x + s1;
    s1 = b1 * x - a1 * y + s2;
    s2 = b2 * x - a2 * y;
    x = y;
  }
}

std::complex<double> Biquad::Response(double freq_hz, double rate) const {
  const std::complex<double> z1 =
      std::polar(1.0, -2.0 * std::numbers::pi * freq_hz / rate);
  const std::complex<double> z2 = z1 * z1;
  return (b0 + b1 * z1 + b2 * z2) / (1.0 + a1 * z1 + a2 * z2);
}

Biquad ButterworthHighpass(double cutoff_hz, double rate) {
  if (!(rate > 2.0 * cutoff_hz)) {
    throw DomainError("high-pass cut-off must be below the Nyquist frequency");
  }
  const double omega = 2.0 * std::numbers::pi * cutoff_hz / rate;
  const double cosw = std::cos(omega);
  const double q_factor = 1.0 / std::numbers::sqrt2;
  const double alpha = std::sin(omega) / (2.0 * q_factor);
  const double a0 = 1.0 + alpha;
  Biquad q;
  q.b0 = (1.0 + cosw) / 2.0 / a0;
  q.b1 = -(1.0 + cosw) / a0;
  q.b2 = q.b0;
  q.a1 = -2.0 * cosw / a0;
  q.a2 = (1.0 - alpha) / a0;
  return q;
}

std::vector<double> Highpass80(std::span<const double> signal, double rate) {
  std::vector<double> out(signal.begin(), signal.end());
  ButterworthHighpass(80.0, rate).Apply(out);
  return out;
}

}  // namespace frarir
