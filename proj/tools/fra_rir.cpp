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

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frarir/bench.hpp"
#include "frarir/commands.hpp"
#include "frarir/config.hpp"
#include "frarir/error.hpp"
#include "frarir/parallel.hpp"
#include "frarir/version.hpp"

namespace {

frarir::SimulationConfig ConfigOrDefault(const std::string& path) {
  return path.empty() ? frarir::SimulationConfig{} : frarir::LoadConfig(path);
}

std::optional<int> OptionalThreads(const CLI::Option* opt, int value) {
  return opt->count() ? std::optional<int>(value) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast random-approximation room impulse response simulator"};
  app.set_version_flag("--version", frarir::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  int threads = 1;

  auto* gen = app.add_subcommand("generate", "Generate a batch of filters");
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  bool emit_early = false;
  std::string replay;
  gen->add_option("-n,--count", count, "Number of filters")->check(CLI::PositiveNumber);
  gen->add_option("-s,--seed", seed, "Run seed");
  gen->add_option("-c,--config", config_path, "Flat JSON config file")
      ->check(CLI::ExistingFile);
  gen->add_option("-o,--out-dir", out_dir, "Output directory");
  gen->add_flag("--emit-early", emit_early, "Also write early-reverberation filters");
  gen->add_option("--replay", replay, "Regenerate the filters listed in a manifest")
      ->check(CLI::ExistingFile)
      ->excludes("--count", "--seed", "--config", "--emit-early");
  auto* gen_threads = gen->add_option("-j,--threads", threads, "Worker threads");

  auto* conv = app.add_subcommand("convolve", "Convolve a signal with a filter");
  std::string rir_path, in_path, out_path;
  conv->add_option("rir", rir_path, "Filter WAV")->required()->check(CLI::ExistingFile);
  conv->add_option("input", in_path, "Input WAV")->required()->check(CLI::ExistingFile);
  conv->add_option("output", out_path, "Output WAV")->required();

  auto* mix = app.add_subcommand("mix", "Simulate a noisy reverberant mixture");
  frarir::MixOptions mix_opts;
  double snr = 0.0;
  mix->add_option("--speech", mix_opts.speech_path, "Speech WAV")
      ->required()->check(CLI::ExistingFile);
  mix->add_option("--noise", mix_opts.noise_paths, "Noise WAV (one or two)")
      ->required()->expected(1, 2)->check(CLI::ExistingFile);
  auto* snr_opt = mix->add_option("--snr", snr, "SNR in dB (default: drawn from [-8, 6])");
  mix->add_option("-s,--seed", mix_opts.seed, "Mix seed");
  mix->add_option("-c,--config", config_path, "Flat JSON config file")
      ->check(CLI::ExistingFile);
  mix->add_option("-o,--out", mix_opts.out_path, "Mixture WAV")->required();

  auto* bench = app.add_subcommand("benchmark", "Time filter generation");
  std::string method = "fra";
  std::size_t bench_count = 100;
  bench->add_option("-m,--method", method, "fra or ism")
      ->check(CLI::IsMember({"fra", "ism"}));
  bench->add_option("-n,--count", bench_count, "Number of filters")
      ->check(CLI::PositiveNumber);
  bench->add_option("-s,--seed", seed, "Run seed");
  bench->add_option("-c,--config", config_path, "Flat JSON config file")
      ->check(CLI::ExistingFile);
  auto* bench_threads = bench->add_option("-j,--threads", threads, "Worker threads");

  auto* analyze = app.add_subcommand("analyze", "Decay, DRR and spectrogram of a filter");
  std::string prefix;
  analyze->add_option("rir", rir_path, "Filter WAV")->required()->check(CLI::ExistingFile);
  analyze->add_option("--csv-prefix", prefix,
                      "Prefix for the CSV outputs (default: input path without .wav)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) {
      const int n_threads = frarir::ResolveThreadCount(OptionalThreads(gen_threads, threads));
      nlohmann::json manifest;
      if (!replay.empty()) {
        manifest = frarir::ReplayManifest(replay, out_dir, n_threads);
      } else {
        frarir::GenerateOptions opts;
        opts.count = count;
        opts.seed = seed;
        opts.config = ConfigOrDefault(config_path);
        opts.out_dir = out_dir;
        opts.emit_early = emit_early;
        opts.threads = n_threads;
        manifest = frarir::RunGenerate(opts);
      }
      std::cout << "wrote " << manifest["filters"].size() << " filters to " << out_dir
                << '\n';
    } else if (conv->parsed()) {
      std::cout << frarir::RunConvolve(rir_path, in_path, out_path).dump(2) << '\n';
    } else if (mix->parsed()) {
      if (snr_opt->count()) mix_opts.snr_db = snr;
      mix_opts.config = ConfigOrDefault(config_path);
      std::cout << frarir::RunMix(mix_opts).dump(2) << '\n';
    } else if (bench->parsed()) {
      const frarir::Method m = frarir::ParseMethod(method);
      const int n_threads =
          frarir::ResolveThreadCount(OptionalThreads(bench_threads, threads));
      const auto summary = frarir::RunBenchmark(m, bench_count, n_threads,
                                                ConfigOrDefault(config_path), seed);
      frarir::PrintSummary(std::cout, m, summary);
    } else if (analyze->parsed()) {
      if (prefix.empty()) prefix = frarir::StripWavExtension(rir_path);
      std::cout << frarir::RunAnalyze(rir_path, prefix).dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    std::string message = e.what();
    for (char& ch : message) {
      if (ch == '\n' || ch == '\r') ch = ' ';
    }
    std::cerr << "error: " << frarir::ErrorKind(e) << ": " << message << '\n';
    return 1;
  }
  return 0;
}
