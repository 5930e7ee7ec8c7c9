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

// File-level operations behind the fra_rir command line tool.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "frarir/config.hpp"

namespace frarir {

struct GenerateOptions {
  std::size_t count = 1;
  std::uint64_t seed = 0;
  SimulationConfig config;
  std::string out_dir = ".";
  bool emit_early = false;
  int threads = 1;
};

std::string FilterFileName(std::size_t index, bool early);

/// Writes rir_%06d.wav (and rir_%06d_early.wav) for seeds DeriveSeed(seed, i)
/// plus manifest.json. Returns the manifest.
nlohmann::json RunGenerate(const GenerateOptions& options);

/// Regenerates every filter listed in a manifest into out_dir, writing a
/// fresh manifest there.
nlohmann::json ReplayManifest(const std::string& manifest_path,
                              const std::string& out_dir, int threads);

/// Convolves a mono input with a mono filter. The output is scaled by
/// 1 / peak only when it would clip; the returned metadata (also written to
/// out_path + ".json") records the gain.
nlohmann::json RunConvolve(const std::string& rir_path, const std::string& in_path,
                           const std::string& out_path);

struct MixOptions {
  std::string speech_path;
  std::vector<std::string> noise_paths;
  std::optional<double> snr_db;
  std::uint64_t seed = 0;
  std::string out_path;
  SimulationConfig config;
};

/// Writes the mixture to out_path and the stems <stem>_target.wav,
/// <stem>_speech.wav and <stem>_noise.wav beside it, with metadata in
/// out_path + ".json".
nlohmann::json RunMix(const MixOptions& options);

/// Returns a report with estimated_t60 (null when the decay is too short to
/// fit), drr_db, and direct_index. Writes <csv_prefix>_edc.csv and
/// <csv_prefix>_spectrogram.csv.
nlohmann::json RunAnalyze(const std::string& rir_path, const std::string& csv_prefix);

/// Path without a trailing ".wav".
std::string StripWavExtension(const std::string& path);

}  // namespace frarir
