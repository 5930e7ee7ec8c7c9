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

#include "frarir/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "frarir/analysis.hpp"
#include "frarir/convolve.hpp"
#include "frarir/error.hpp"
#include "frarir/mix.hpp"
#include "frarir/parallel.hpp"
#include "frarir/random.hpp"
#include "frarir/synthesis.hpp"
#include "frarir/version.hpp"
#include "frarir/wav.hpp"

namespace frarir {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kManifestName = "manifest.json";
constexpr const char* kHighpassNote =
    "2nd-order Butterworth high-pass at 80 Hz, single forward pass at the mid rate";

void EnsureDirectory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir);
  }
}

void WriteJson(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

json ReadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::ofstream OpenCsv(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

json GenerateSeeds(const SimulationConfig& config,
                   const std::vector<std::uint64_t>& seeds,
                   std::optional<std::uint64_t> run_seed, const std::string& out_dir,
                   bool emit_early, int threads) {
  config.Validate();
  EnsureDirectory(out_dir);
  const ResamplePipeline pipeline(config);
  std::vector<json> records(seeds.size());
  ParallelFor(seeds.size(), threads, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const RirPair pair = Generate(config, seeds[i], pipeline);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string file = FilterFileName(i, false);
    WriteWavFloat((fs::path(out_dir) / file).string(), pair.full.sample_rate,
                  pair.full.samples);
    json record = {{"index", i},
                   {"seed", seeds[i]},
                   {"file", file},
                   {"early_file", nullptr},
                   {"t60", pair.scene.t60},
                   {"room_stat", pair.scene.room_stat},
                   {"reflection_coeff", pair.scene.reflection_coeff},
                   {"direct_dist", pair.scene.direct_dist},
                   {"direct_index", pair.full.direct_index},
                   {"length", pair.full.samples.size()},
                   {"elapsed_seconds", elapsed}};
    if (emit_early) {
      const std::string early = FilterFileName(i, true);
      WriteWavFloat((fs::path(out_dir) / early).string(), pair.early.sample_rate,
                    pair.early.samples);
      record["early_file"] = early;
    }
    records[i] = std::move(record);
  });

  json manifest = {{"tool", kToolName},
                   {"version", kVersion},
                   {"rng", kRngAlgorithm},
                   {"run_seed", run_seed ? json(*run_seed) : json(nullptr)},
                   {"config", ToJson(config)},
                   {"highpass", kHighpassNote},
                   {"emit_early", emit_early},
                   {"seeds", seeds},
                   {"filters", records}};
  WriteJson((fs::path(out_dir) / kManifestName).string(), manifest);
  return manifest;
}

// Scales x by 1 / peak when it would clip; returns the original peak.
double PeakNormalize(std::vector<double>& x) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak > 1.0) {
    for (double& v : x) v /= peak;
  }
  return peak;
}

}  // namespace

std::string FilterFileName(std::size_t index, bool early) {
  char name[32];
  std::snprintf(name, sizeof(name), early ? "rir_%06zu_early.wav" : "rir_%06zu.wav",
                index);
  return name;
}

std::string StripWavExtension(const std::string& path) {
  const fs::path p(path);
  return p.extension() == ".wav" ? (p.parent_path() / p.stem()).string() : path;
}

json RunGenerate(const GenerateOptions& options) {
  std::vector<std::uint64_t> seeds(options.count);
  for (std::size_t i = 0; i < options.count; ++i) seeds[i] = DeriveSeed(options.seed, i);
  return GenerateSeeds(options.config, seeds, options.seed, options.out_dir,
                       options.emit_early, options.threads);
}

json ReplayManifest(const std::string& manifest_path, const std::string& out_dir,
                    int threads) {
  const json manifest = ReadJson(manifest_path);
  try {
    if (manifest.at("rng").get<std::string>() != kRngAlgorithm) {
      throw ConfigError("manifest uses a different random number algorithm");
    }
    const SimulationConfig config = ConfigFromJson(manifest.at("config"));
    const auto seeds = manifest.at("seeds").get<std::vector<std::uint64_t>>();
    std::optional<std::uint64_t> run_seed;
    if (!manifest.at("run_seed").is_null()) {
      run_seed = manifest["run_seed"].get<std::uint64_t>();
    }
    return GenerateSeeds(config, seeds, run_seed, out_dir,
                         manifest.at("emit_early").get<bool>(), threads);
  } catch (const json::exception& e) {
    throw ConfigError(manifest_path + ": " + e.what());
  }
}

json RunConvolve(const std::string& rir_path, const std::string& in_path,
                 const std::string& out_path) {
  const WavData rir = ReadMonoWav(rir_path);
  const WavData input = ReadMonoWav(in_path);
  if (rir.sample_rate != input.sample_rate) {
    throw DomainError("sample rate mismatch: filter " + std::to_string(rir.sample_rate) +
                      " Hz, input " + std::to_string(input.sample_rate) + " Hz");
  }
  if (rir.samples.empty() || input.samples.empty()) {
    throw DomainError("empty filter or input");
  }
  std::vector<double> out = Convolve(input.samples, rir.samples);
  const double peak = PeakNormalize(out);
  WriteWavFloat(out_path, input.sample_rate, out);
  const json meta = {{"rir", rir_path},
                     {"input", in_path},
                     {"output", out_path},
                     {"sample_rate", input.sample_rate},
                     {"length", out.size()},
                     {"peak_before_normalization", peak},
                     {"normalized", peak > 1.0},
                     {"gain", peak > 1.0 ? 1.0 / peak : 1.0}};
  WriteJson(out_path + ".json", meta);
  return meta;
}

json RunMix(const MixOptions& options) {
  const WavData speech = ReadMonoWav(options.speech_path);
  std::vector<std::vector<double>> noises;
  for (const std::string& path : options.noise_paths) {
    WavData noise = ReadMonoWav(path);
    if (noise.sample_rate != speech.sample_rate) {
      throw DomainError("sample rate mismatch between " + options.speech_path +
                        " and " + path);
    }
    noises.push_back(std::move(noise.samples));
  }
  const MixResult mix = MixSignals(speech.samples, noises, speech.sample_rate,
                                   options.snr_db, options.seed, options.config);

  const std::string stem = StripWavExtension(options.out_path);
  const std::string target = stem + "_target.wav";
  const std::string speech_out = stem + "_speech.wav";
  const std::string noise_out = stem + "_noise.wav";
  WriteWavFloat(options.out_path, mix.sample_rate, mix.mixture);
  WriteWavFloat(target, mix.sample_rate, mix.target);
  WriteWavFloat(speech_out, mix.sample_rate, mix.speech);
  WriteWavFloat(noise_out, mix.sample_rate, mix.noise);

  json rirs = json::array();
  for (std::size_t k = 0; k < mix.scenes.size(); ++k) {
    const SceneDraw& s = mix.scenes[k];
    rirs.push_back({{"source", k == 0 ? "speech" : "noise" + std::to_string(k - 1)},
                    {"seed", s.seed},
                    {"t60", s.t60},
                    {"room_stat", s.room_stat},
                    {"reflection_coeff", s.reflection_coeff},
                    {"direct_dist", s.direct_dist}});
  }
  const json meta = {{"tool", kToolName},
                     {"version", kVersion},
                     {"rng", kRngAlgorithm},
                     {"seed", options.seed},
                     {"speech", options.speech_path},
                     {"noises", options.noise_paths},
                     {"snr_db", mix.snr_db},
                     {"snr_sampled", mix.snr_sampled},
                     {"gain", mix.gain},
                     {"sample_rate", mix.sample_rate},
                     {"length", mix.mixture.size()},
                     {"mixture", options.out_path},
                     {"target", target},
                     {"speech_stem", speech_out},
                     {"noise_stem", noise_out},
                     {"config", ToJson([&] {
                        SimulationConfig c = options.config;
                        c.sample_rate = mix.sample_rate;
                        return c;
                      }())},
                     {"rirs", rirs}};
  WriteJson(options.out_path + ".json", meta);
  return meta;
}

json RunAnalyze(const std::string& rir_path, const std::string& csv_prefix) {
  const WavData wav = ReadMonoWav(rir_path);
  const DecayAnalysis a = Analyze(wav.samples, wav.sample_rate);
  const Spectrogram spec = ComputeSpectrogram(wav.samples);

  const std::string edc_path = csv_prefix + "_edc.csv";
  const std::string spec_path = csv_prefix + "_spectrogram.csv";
  {
    std::ofstream out = OpenCsv(edc_path);
    WriteEdcCsv(out, a.edc_db, wav.sample_rate);
    if (!out) throw IoError("write failed for " + edc_path);
  }
  {
    std::ofstream out = OpenCsv(spec_path);
    WriteSpectrogramCsv(out, spec, wav.sample_rate);
    if (!out) throw IoError("write failed for " + spec_path);
  }

  json report = {{"file", rir_path},
                 {"sample_rate", wav.sample_rate},
                 {"length", wav.samples.size()},
                 {"estimated_t60", a.estimated_t60 ? json(*a.estimated_t60) : json(nullptr)},
                 {"insufficient_decay", !a.estimated_t60.has_value()},
                 {"fit_range_db", {a.fit_range_db.hi, a.fit_range_db.lo}},
                 {"direct_index", a.direct_index},
                 {"edc_csv", edc_path},
                 {"spectrogram_csv", spec_path},
                 {"spectrogram_frames", spec.frames},
                 {"spectrogram_bins", spec.bins}};
  if (std::isinf(a.drr_db)) {
    report["drr_db"] = a.drr_db > 0 ? "inf" : "-inf";
  } else {
    report["drr_db"] = a.drr_db;
  }
  return report;
}

}  // namespace frarir
