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

// JSON views of simulation results. Field names and order are part of the
// command-line output contract.

#include <string>

#include "json.hpp"

#include "cct/protocol.hpp"
#include "cct/zeno.hpp"
#include "cct/zeno_sim.hpp"

namespace cct {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z);  // [re, im]
Json state_json(const StateVector& s);  // {"|ab>": [re, im], ...} over nonzero amplitudes
Json report_json(const MonteCarloReport& r);
Json stage_probabilities_json(const StageProbabilities& p);
Json verification_json(const VerificationReport& r);

std::string to_string(OutcomeKind kind);
std::string to_string(AbsorberModel model);

}  // namespace cct
