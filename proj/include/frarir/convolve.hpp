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

#include <span>
#include <vector>

namespace frarir {

/// Full linear convolution, length a.size() + b.size() - 1 (empty if either
/// input is empty).
std::vector<double> ConvolveDirect(std::span<const double> a,
                                   std::span<const double> b);
std::vector<double> ConvolveFft(std::span<const double> a,
                                std::span<const double> b);

/// Direct form when the shorter input has at most this many samples.
inline constexpr std::size_t kDirectConvolutionMaxKernel = 64;

std::vector<double> Convolve(std::span<const double> a,
                             std::span<const double> b);

}  // namespace frarir
