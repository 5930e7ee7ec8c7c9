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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "frarir/analysis.hpp"
#include "frarir/dsp.hpp"
#include "frarir/error.hpp"
#include "frarir/synthesis.hpp"

namespace frarir {
namespace {

double Energy(const std::vector<double>& x) {
  return std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
}

double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

double MaxAbs(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("comb index and length") {
  const SimulationConfig config;
  CHECK(config.HighRate() == 1024000.0);
  CHECK(CombIndex(3.4, 340.0, config.HighRate(), 1u << 20) == 10240);
  CHECK(CombIndex(1000.0, 340.0, config.HighRate(), 500) == 499);
  CHECK(FilterLength(0.5, 16000.0) == 8000);
  CHECK(FilterLength(0.10001, 16000.0) == 1601);
  CHECK_THROWS_AS(FilterLength(0.0, 16000.0), DomainError);
  CHECK_THROWS_AS(FilterLength(1e9, 16000.0), DomainError);
}

TEST_CASE("comb with no images is a single direct tap") {
  const SimulationConfig config;
  const RirFilter comb = BuildComb(3.4, 0.3, 0.9, {}, config);
  CHECK(comb.samples.size() == FilterLength(0.3, config.HighRate()));
  CHECK(comb.direct_index == 10240);
  CHECK(comb.samples[10240] == 1.0 / 3.4);
  CHECK(std::count_if(comb.samples.begin(), comb.samples.end(),
                      [](double v) { return v != 0.0; }) == 1);
}

TEST_CASE("colliding taps accumulate") {
  const SimulationConfig config;
  const std::vector<SoundPath> paths = {{5.0, 2.0}, {5.0, 3.0}, {7.0, 1.5}};
  const RirFilter comb = BuildComb(2.0, 0.3, 0.8, paths, config);
  const std::size_t q5 = CombIndex(5.0, 340.0, config.HighRate(), comb.samples.size());
  const std::size_t q7 = CombIndex(7.0, 340.0, config.HighRate(), comb.samples.size());
  CHECK(comb.samples[q5] == (0.0 + std::pow(0.8, 2.0) / 5.0) + std::pow(0.8, 3.0) / 5.0);
  CHECK(comb.samples[q7] == std::pow(0.8, 1.5) / 7.0);
  // Tap times are the geometric delays to within one comb sample.
  CHECK(std::abs(q7 / config.HighRate() - 7.0 / 340.0) < 1.0 / config.HighRate());
}

TEST_CASE("early window keeps [-6, 50] ms around the direct tap") {
  const SimulationConfig config;
  const double rate = config.HighRate();
  const IndexWindow w = EarlyWindowRange(20000, rate, config);
  CHECK(w.lo == 20000 - 6144);
  CHECK(w.hi == 20000 + 51200);

  const std::vector<SoundPath> paths = {{3.4 + 0.051 * 340.0, 1.0}, {3.4 + 0.049 * 340.0, 1.0},
                                        {3.4 - 0.0059 * 340.0, 1.0}, {1.0, 1.0}};
  const RirFilter comb = BuildComb(3.4, 0.4, 0.9, paths, config);
  const RirFilter early = EarlyWindow(comb, config);
  CHECK(early.samples.size() == comb.samples.size());
  CHECK(early.samples[comb.direct_index] == comb.samples[comb.direct_index]);
  const auto idx = [&](double d) { return CombIndex(d, 340.0, rate, comb.samples.size()); };
  CHECK(early.samples[idx(3.4 + 0.051 * 340.0)] == 0.0);
  CHECK(early.samples[idx(3.4 + 0.049 * 340.0)] != 0.0);
  CHECK(early.samples[idx(3.4 - 0.0059 * 340.0)] != 0.0);
  CHECK(early.samples[idx(1.0)] == 0.0);
  CHECK(EarlyWindow(early, config) == early);

  const IndexWindow win = EarlyWindowRange(static_cast<long>(comb.direct_index), rate, config);
  for (std::size_t n = 0; n < comb.samples.size(); ++n) {
    if (!win.Contains(static_cast<long>(n))) REQUIRE(early.samples[n] == 0.0);
  }
}

TEST_CASE("decimator design") {
  for (int factor : {2, 8}) {
    const Decimator dec(factor);
    const auto& taps = dec.taps();
    REQUIRE(taps.size() == static_cast<std::size_t>(2 * dec.half_length() + 1));
    CHECK(std::accumulate(taps.begin(), taps.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < taps.size(); ++i) CHECK(taps[i] == taps[taps.size() - 1 - i]);

    // Magnitude response on a dense grid, frequency in cycles per input sample.
    const auto gain = [&](double f) {
      double re = 0.0;
      for (int k = -dec.half_length(); k <= dec.half_length(); ++k) {
        re += taps[k + dec.half_length()] * std::cos(2 * std::numbers::pi * f * k);
      }
      return std::abs(re);
    };
    const double out_nyquist = 0.5 / factor;
    for (int i = 0; i <= 200; ++i) {
      const double f = out_nyquist + (0.5 - out_nyquist) * i / 200.0;
      CHECK(20 * std::log10(gain(f) + 1e-300) <= -kDecimatorStopbandDb);
    }
    for (int i = 0; i <= 100; ++i) {
      CHECK(gain(0.8 * out_nyquist * i / 100.0) == doctest::Approx(1.0).epsilon(0.01));
    }
  }
  const Decimator identity(1);
  const std::vector<double> x = {1, 2, 3};
  CHECK(identity.ProcessDense(x) == x);
  CHECK(identity.ProcessSparse(x) == x);
}

TEST_CASE("sparse and dense decimation agree") {
  const Decimator dec(8);
  std::vector<double> x(5000, 0.0);
  for (std::size_t i = 3; i < x.size(); i += 97) x[i] = std::sin(0.37 * i) + 0.1;
  x.front() = 1.0;
  x.back() = -1.0;
  const auto dense = dec.ProcessDense(x);
  const auto sparse = dec.ProcessSparse(x);
  REQUIRE(dense.size() == dec.OutputLength(x.size()));
  REQUIRE(sparse.size() == dense.size());
  CHECK(MaxAbsDiff(dense, sparse) < 1e-14);

  const auto limited = dec.ProcessDense(x, 100);
  CHECK(std::equal(limited.begin(), limited.begin() + 100, dense.begin()));
  CHECK(std::all_of(limited.begin() + 100, limited.end(), [](double v) { return v == 0.0; }));
}

TEST_CASE("80 Hz high-pass") {
  const double rate = 128000.0;
  const Biquad hp = ButterworthHighpass(80.0, rate);
  CHECK(std::abs(hp.Response(0.0, rate)) < 1e-12);
  CHECK(std::abs(hp.Response(80.0, rate)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));

  SUBCASE("constant input averages out") {
    const auto y = Highpass80(std::vector<double>(4096, 1.0), rate);
    const double mean = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
    CHECK(std::abs(mean) <= 1e-3);
    CHECK(std::abs(y.back()) < 1e-4);
  }
  SUBCASE("1 kHz tone passes") {
    std::vector<double> x(4 * 12800);
    for (std::size_t n = 0; n < x.size(); ++n) x[n] = std::sin(2 * std::numbers::pi * 1000.0 * n / rate);
    const auto y = Highpass80(x, rate);
    const double peak = *std::max_element(y.begin() + y.size() / 2, y.end());
    CHECK(peak == doctest::Approx(std::abs(hp.Response(1000.0, rate))).epsilon(1e-3));
    CHECK(peak == doctest::Approx(1.0).epsilon(0.01));
  }
  SUBCASE("zero in, zero out") {
    const auto y = Highpass80(std::vector<double>(1000, 0.0), rate);
    CHECK(std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; }));
  }
  CHECK_THROWS_AS(ButterworthHighpass(80.0, 150.0), DomainError);
}

TEST_CASE("pipeline length and delay bookkeeping") {
  const SimulationConfig config;
  const ResamplePipeline pipeline(config);
  for (double t60 : {0.1, 0.2371, 0.8}) {
    const RirFilter comb = BuildComb(1.0, t60, 0.9, {}, config);
    CHECK(comb.samples.size() == FilterLength(t60, config.HighRate()));
    CHECK(pipeline.Run(comb, FilterLength(t60, config.sample_rate)).samples.size() ==
          FilterLength(t60, config.sample_rate));
    CHECK(ResampleToOutput(comb, t60, config).samples.size() == FilterLength(t60, config.sample_rate));
  }

  const RirFilter comb = BuildComb(3.4, 0.5, 0.9, {}, config);
  const RirFilter out = pipeline.Run(comb, 8000);
  const auto peak = std::max_element(out.samples.begin(), out.samples.end(),
                                     [](double a, double b) { return std::abs(a) < std::abs(b); });
  CHECK(std::abs(static_cast<long>(peak - out.samples.begin()) - 160) <= 1);
  CHECK(out.direct_index == 160);
}

TEST_CASE("pipeline is linear") {
  const SimulationConfig config;
  const ResamplePipeline pipeline(config);
  const RirFilter x = BuildComb(SampleScene(config, 1), config);
  RirFilter y = BuildComb(SampleScene(config, 2), config);
  y.samples.resize(x.samples.size(), 0.0);
  RirFilter mix = x;
  for (std::size_t i = 0; i < mix.samples.size(); ++i) {
    mix.samples[i] = 0.7 * x.samples[i] - 2.5 * y.samples[i];
  }
  const std::size_t n = 4000;
  const auto fx = pipeline.Run(x, n).samples;
  const auto fy = pipeline.Run(y, n).samples;
  const auto fm = pipeline.Run(mix, n).samples;
  std::vector<double> expect(n);
  for (std::size_t i = 0; i < n; ++i) expect[i] = 0.7 * fx[i] - 2.5 * fy[i];
  CHECK(MaxAbsDiff(fm, expect) <= 1e-6 * MaxAbs(expect));
}

TEST_CASE("pipeline energy against an ideal band-limited resampler") {
  // For taps a_k at times t_k, an ideal low-pass to fs/2 with unit DC gain
  // sampled at fs has energy sum_jk a_j a_k sinc(fs (t_j - t_k)) / r_h^2.
  SimulationConfig config;
  config.num_images = 64;
  const ResamplePipeline pipeline(config);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const SceneDraw scene = SampleScene(config, DeriveSeed(3, seed));
    const RirFilter comb = BuildComb(scene, config);
    const RirFilter out = pipeline.Run(comb, FilterLength(scene.t60, config.sample_rate));
    std::vector<double> t, a;
    for (std::size_t i = 0; i < comb.samples.size(); ++i) {
      if (comb.samples[i] != 0.0) {
        t.push_back(static_cast<double>(i) / config.high_rate_factor);
        a.push_back(comb.samples[i]);
      }
    }
    double reference = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      for (std::size_t k = 0; k < t.size(); ++k) {
        const double u = std::numbers::pi * (t[j] - t[k]);
        reference += a[j] * a[k] * (u == 0.0 ? 1.0 : std::sin(u) / u);
      }
    }
    reference /= static_cast<double>(config.high_rate_factor) * config.high_rate_factor;
    const double ratio = Energy(out.samples) / reference;
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 1.0);
  }
}

TEST_CASE("gated run equals full run followed by the gate") {
  const SimulationConfig config;
  const ResamplePipeline pipeline(config);
  CHECK(pipeline.TailMargin() == 23);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SceneDraw scene = SampleScene(config, DeriveSeed(8, seed));
    const RirFilter early_comb = EarlyWindow(BuildComb(scene, config), scene, config);
    const std::size_t n = FilterLength(scene.t60, config.sample_rate);
    RirFilter full = pipeline.Run(early_comb, n);
    const IndexWindow keep = EarlyOutputRange(full, config, pipeline.TailMargin());
    for (std::size_t i = 0; i < n; ++i) {
      if (!keep.Contains(static_cast<long>(i))) full.samples[i] = 0.0;
    }
    CHECK(pipeline.Run(early_comb, n, keep) == full);
  }
}

TEST_CASE("generated pairs") {
  const SimulationConfig config;
  const ResamplePipeline pipeline(config);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RirPair pair = Generate(config, DeriveSeed(5, seed), pipeline);
    const std::size_t n = FilterLength(pair.scene.t60, config.sample_rate);
    CHECK(pair.full.sample_rate == 16000.0);
    CHECK(pair.full.samples.size() == n);
    CHECK(pair.early.samples.size() == n);
    CHECK(pair.full.direct_index == pair.early.direct_index);
    CHECK(std::llabs(static_cast<long long>(pair.full.direct_index) -
                     std::llround(pair.scene.direct_dist / config.sound_velocity * 16000.0)) <= 1);

    const IndexWindow keep = EarlyOutputRange(pair.early, config, pipeline.TailMargin());
    CHECK(keep.hi <= static_cast<long>(pair.full.direct_index) + 800 + 23 + 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (!keep.Contains(static_cast<long>(i))) REQUIRE(pair.early.samples[i] == 0.0);
    }

    const double mean = std::accumulate(pair.full.samples.begin(), pair.full.samples.end(), 0.0) / n;
    double mean_abs = 0.0;
    for (double v : pair.full.samples) mean_abs += std::abs(v);
    CHECK(std::abs(mean) <= 1e-3 * mean_abs / n);

    const RirPair again = Generate(config, DeriveSeed(5, seed));
    CHECK(again.full == pair.full);
    CHECK(again.early == pair.early);
    CHECK(again.scene == pair.scene);
  }
}

TEST_CASE("decay of generated filters against the drawn T60") {
  // The sampled image population decays more slowly than its nominal T60:
  // estimates run 1.2x to 2.6x the drawn value. The band below was frozen
  // from one calibration run over these 100 seeds and guards against drift.
  const SimulationConfig config;
  const ResamplePipeline pipeline(config);
  int inside = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const RirPair pair = Generate(config, DeriveSeed(2026, s), pipeline);
    try {
      const double ratio = EstimateT60(SchroederEdc(pair.full.samples), config.sample_rate) /
                           pair.scene.t60;
      if (ratio >= 0.9 && ratio <= 2.7) ++inside;
    } catch (const InsufficientDecayError&) {
    }
  }
  CHECK(inside >= 90);
}

}  // namespace frarir
