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

#include "frarir/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <new>

#include "frarir/error.hpp"

namespace frarir {

namespace {
std::mutex& PlannerMutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(std::size_t size) : size_(size) {
  if (size == 0) throw DomainError("FFT size must be positive");
  std::lock_guard<std::mutex> lock(PlannerMutex());
  real_ = static_cast<double*>(fftw_malloc(sizeof(double) * size_));
  complex_ = static_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * bins()));
  if (!real_ || !complex_) {
    fftw_free(real_);
    fftw_free(complex_);
    throw std::bad_alloc();
  }
  auto* c = reinterpret_cast<fftw_complex*>(complex_);
  const int n = static_cast<int>(size_);
  forward_plan_ = fftw_plan_dft_r2c_1d(n, real_, c, FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft_c2r_1d(n, c, real_, FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(PlannerMutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
  fftw_free(real_);
  fftw_free(complex_);
}

std::vector<std::complex<double>> RealFft::Forward(
    std::span<const double> input) {
  if (input.size() > size_) throw DomainError("FFT input longer than plan size");
  std::copy(input.begin(), input.end(), real_);
  std::fill(real_ + input.size(), real_ + size_, 0.0);
  fftw_execute(static_cast<fftw_plan>(forward_plan_));
  return {complex_, complex_ + bins()};
}

std::vector<double> RealFft::Inverse(
    std::span<const std::complex<double>> spectrum) {
  if (spectrum.size() != bins()) throw DomainError("spectrum size mismatch");
  // c2r overwrites its input, so work on the internal buffer.
  std::copy(spectrum.begin(), spectrum.end(), complex_);
  fftw_execute(static_cast<fftw_plan>(inverse_plan_));
  return {real_, real_ + size_};
}

}  // namespace frarir
