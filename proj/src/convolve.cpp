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

#include "frarir/convolve.hpp"

#include <algorithm>
#include <bit>

#include "frarir/fft.hpp"

namespace frarir {

std::vector<double> ConvolveDirect(std::span<const double> a,
                                   std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a[i];
    if (x == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += x * b[j];
  }
  return out;
}

std::vector<double> ConvolveFft(std::span<const double> a,
                                std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  RealFft fft(std::bit_ceil(n));
  auto fa = fft.Forward(a);
  const auto fb = fft.Forward(b);
  for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
  std::vector<double> out = fft.Inverse(fa);
  out.resize(n);
  const double scale = 1.0 / static_cast<double>(fft.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<double> Convolve(std::span<const double> a,
                             std::span<const double> b) {
  if (std::min(a.size(), b.size()) <= kDirectConvolutionMaxKernel) {
    return ConvolveDirect(a, b);
  }
  return ConvolveFft(a, b);
}

}  // namespace frarir
