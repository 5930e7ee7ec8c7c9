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

// Filters used by the resampling chain: Kaiser windowed-sinc decimators and
// the second-order Butterworth high-pass.

#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace frarir {

/// Stopband attenuation of the anti-alias decimators, in dB.
inline constexpr double kDecimatorStopbandDb = 60.0;

/// Kaiser window shape parameter for a given stopband attenuation.
double KaiserBeta(double attenuation_db);

/// Symmetric windowed-sinc low-pass with 2 * half_length + 1 taps, cutoff in
/// cycles/sample, normalized to unit DC gain.
std::vector<double> KaiserLowpass(int half_length, double cutoff,
                                  double kaiser_beta);

/// Zero-delay polyphase decimator. Output sample m is centred on input sample
/// m * factor, so the linear-phase group delay is compensated in place.
///
/// The passband ends at 0.8 of the output Nyquist frequency and the 60 dB
/// stopband starts at the output Nyquist frequency.
class Decimator {
 public:
  explicit Decimator(int factor);

  int factor() const { return factor_; }
  int half_length() const { return half_length_; }
  const std::vector<double>& taps() const { return taps_; }

  /// Output length for a given input length: ceil(n / factor).
  std::size_t OutputLength(std::size_t input_length) const;

  /// Gather form, for dense signals. Only the first output_limit outputs are
  /// computed; the rest of the OutputLength(n) result is zero.
  std::vector<double> ProcessDense(
      std::span<const double> input,
      std::size_t output_limit = std::numeric_limits<std::size_t>::max()) const;

  /// Scatter form that skips zero input samples; cost scales with the
  /// number of non-zeros, which makes it the right choice for dirac combs.
  /// Outputs from output_limit on are left at zero.
  std::vector<double> ProcessSparse(
      std::span<const double> input,
      std::size_t output_limit = std::numeric_limits<std::size_t>::max()) const;

 private:
  int factor_;
  int half_length_;
  std::vector<double> taps_;
};

/// Direct-form biquad, coefficients normalized so a0 = 1.
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;

  /// Single forward pass from zero state.
  void Apply(std::span<double> signal) const;
  std::complex<double> Response(double freq_hz, double rate) const;
};

/// Second-order Butterworth high-pass (bilinear transform, pre-warped at the
/// cut-off).
Biquad ButterworthHighpass(double cutoff_hz, double rate);

/// 80 Hz second-order Butterworth high-pass, one forward pass.
/// Requires rate > 160 Hz.
std::vector<double> Highpass80(std::span<const double> signal, double rate);

}  // namespace frarir
