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

// The desk-scale acceptance suite shared by `cctsim verify` and the
// acceptance test binary. Each criterion reports pass/fail, a one-line detail
// and its wall time.

#include <cstdint>
#include <string>
#include <vector>

#include "cct/parallel.hpp"

namespace cct {

struct AcceptanceOptions {
  std::uint64_t seed = 42;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
  /// Name of a gate to corrupt before the gate checks run (negative control).
  /// Empty means no fault. See fault_targets().
  std::string inject_fault;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<std::string> fault_targets();

/// Runs criteria 1..9 in order. Throws std::invalid_argument for an unknown
/// fault name.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "[PASS] 1 gate-correctness (0.012 s): ..." per criterion.
std::string format_result(const CriterionResult& r);

}  // namespace cct
