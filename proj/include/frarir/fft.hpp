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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace frarir {

/// Real-input FFT of fixed size backed by FFTW. Plan creation is serialized
/// internally (the FFTW planner is not thread-safe); Forward/Inverse may run
/// concurrently on distinct objects.
class RealFft {
 public:
  explicit RealFft(std::size_t size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return size_; }
  std::size_t bins() const { return size_ / 2 + 1; }

  /// input.size() <= size(); missing samples are zero.
  std::vector<std::complex<double>> Forward(std::span<const double> input);

  /// Unnormalized inverse: Inverse(Forward(x)) == size() * x.
  std::vector<double> Inverse(std::span<const std::complex<double>> spectrum);

 private:
  std::size_t size_;
  double* real_;
  std::complex<double>* complex_;
  void* forward_plan_;
  void* inverse_plan_;
};

}  // namespace frarir
