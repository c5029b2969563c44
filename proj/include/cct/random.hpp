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

#include <cstdint>
#include <random>

namespace cct {

/// The only stateful object in the library. Never share one between threads;
/// derive an independent stream per trial with stream_for().
using RandomSource = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits, so the value sequence
/// depends only on the engine (not on the standard library's distributions).
inline double uniform01(RandomSource& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// True with probability p.
inline bool bernoulli(RandomSource& rng, double p) { return uniform01(rng) < p; }

/// Independent stream for trial `index` of a campaign seeded with `seed`.
inline RandomSource stream_for(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return RandomSource(seq);
}

}  // namespace cct
