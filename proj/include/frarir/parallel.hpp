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

#include <cstddef>
#include <functional>
#include <optional>

namespace frarir {

inline constexpr const char* kThreadsEnvVar = "FRA_RIR_THREADS";

/// Explicit request if given, else FRA_RIR_THREADS, else the hardware
/// concurrency. Always >= 1. Throws ConfigError for a malformed env value.
int ResolveThreadCount(std::optional<int> requested);

/// Runs job(i) for i in [0, count) on `threads` workers pulling indices from
/// a shared counter. The first exception thrown by any job is rethrown after
/// all workers stop; remaining jobs are skipped.
void ParallelFor(std::size_t count, int threads,
                 const std::function<void(std::size_t)>& job);

}  // namespace frarir
