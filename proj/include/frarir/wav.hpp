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

// RIFF/WAVE reading (PCM 8/16/24/32-bit, IEEE float 32/64-bit, plain or
// WAVE_FORMAT_EXTENSIBLE) and 32-bit float mono writing.

#pragma once

#include <span>
#include <string>
#include <vector>

namespace frarir {

struct WavData {
  double sample_rate = 0.0;
  int channels = 1;
  /// Interleaved, full scale mapped to [-1, 1).
  std::vector<double> samples;

  std::size_t frames() const { return channels ? samples.size() / channels : 0; }
};

/// Throws IoError on missing files or malformed / unsupported content.
WavData ReadWav(const std::string& path);

/// Like ReadWav but throws IoError unless the file has exactly one channel.
WavData ReadMonoWav(const std::string& path);

/// 32-bit IEEE float, one channel, with an 18-byte fmt chunk and a fact chunk.
void WriteWavFloat(const std::string& path, double sample_rate,
                   std::span<const double> samples);

}  // namespace frarir
