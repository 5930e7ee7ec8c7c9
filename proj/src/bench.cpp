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

#include "frarir/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>

#include "frarir/error.hpp"
#include "frarir/ism.hpp"
#include "frarir/parallel.hpp"
#include "frarir/random.hpp"
#include "frarir/synthesis.hpp"

namespace frarir {

namespace {
using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}
}  // namespace

Method ParseMethod(const std::string& name) {
  if (name == "fra") return Method::kFra;
  if (name == "ism") return Method::kIsm;
  throw ConfigError("unknown method '" + name + "', expected fra or ism");
}

const char* MethodName(Method method) {
  return method == Method::kFra ? "fra" : "ism";
}

double Quantile(std::vector<double> values, double q) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - lo) * (values[hi] - values[lo]);
}

TimingSummary Summarize(const std::vector<double>& seconds, double wall_seconds,
                        int threads) {
  TimingSummary s;
  s.count = seconds.size();
  s.threads = threads;
  s.wall_seconds = wall_seconds;
  if (seconds.empty()) return s;
  const auto [lo, hi] = std::minmax_element(seconds.begin(), seconds.end());
  s.min = *lo;
  s.max = *hi;
  s.median = Quantile(seconds, 0.5);
  s.p90 = Quantile(seconds, 0.9);
  s.mean = std::accumulate(seconds.begin(), seconds.end(), 0.0) / s.count;
  s.throughput = wall_seconds > 0 ? s.count / wall_seconds : 0.0;
  return s;
}

TimingSummary RunBenchmark(Method method, std::size_t count, int threads,
                           const SimulationConfig& config, std::uint64_t seed) {
  const ResamplePipeline pipeline(config);
  std::vector<double> seconds(count, 0.0);
  const auto start = Clock::now();
  ParallelFor(count, threads, [&](std::size_t i) {
    const std::uint64_t job_seed = DeriveSeed(seed, i);
    if (method == Method::kFra) {
      const auto t0 = Clock::now();
      const RirPair pair = Generate(config, job_seed, pipeline);
      seconds[i] = SecondsSince(t0);
    } else {
      Rng rng(job_seed);
      const ShoeboxRoom room = SampleShoeboxRoom(rng, config);
      const auto t0 = Clock::now();
      const RirPair pair = IsmFilter(room, config, pipeline);
      seconds[i] = SecondsSince(t0);
    }
  });
  return Summarize(seconds, SecondsSince(start), threads);
}

void PrintSummary(std::ostream& os, Method method, const TimingSummary& s) {
  os << std::fixed << std::setprecision(6) << "method " << MethodName(method)
     << "\ncount " << s.count << "\nthreads " << s.threads
     << "\nmedian_s " << s.median << "\np90_s " << s.p90 << "\nmin_s " << s.min
     << "\nmax_s " << s.max << "\nmean_s " << s.mean << "\nwall_s "
     << s.wall_seconds << "\nthroughput_per_s " << std::setprecision(2)
     << s.throughput << '\n';
  os.unsetf(std::ios::floatfield);
}

}  // namespace frarir
