// Copyright 2026 The cctsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cct {

/// Serial is the reference path; Parallel must produce bitwise-identical
/// results because every trial owns its random stream and results are
/// reduced in trial order.
enum class ExecutionPolicy { Serial, Parallel };

/// Evaluates fn(i) for i in [0, n) and stores the results in trial order.
template <typename Result, typename Fn>
std::vector<Result> map_trials(ExecutionPolicy policy, std::size_t n, Fn&& fn) {
  std::vector<Result> out(n);
  if (policy == ExecutionPolicy::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(static_cast<std::uint64_t>(i));
    return out;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = fn(static_cast<std::uint64_t>(i));
  }
  return out;
}

/// Number of OpenMP threads a parallel region would use (1 without OpenMP).
int available_threads();

}  // namespace cct
