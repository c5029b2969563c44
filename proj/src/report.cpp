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

#include "cct/report.hpp"

#include <cmath>

namespace cct {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json state_json(const StateVector& s) {
  Json out = Json::object();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::abs(s[i]) > 1e-15) out[basis_label(s.dims(), i)] = complex_json(s[i]);
  }
  return out;
}

Json report_json(const MonteCarloReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  j["absorbed"] = r.absorbed;
  j["discarded"] = r.discarded;
  j["abort_rate"] = r.abort_rate;
  j["standard_error"] = r.standard_error;
  j["conditional_fidelity"] = r.conditional_fidelity ? Json(*r.conditional_fidelity) : Json(nullptr);
  j["counterfactual_violations"] = r.counterfactual_violations;
  j["seed"] = r.seed;
  return j;
}

Json stage_probabilities_json(const StageProbabilities& p) {
  Json j;
  for (std::size_t i = 0; i < p.lambda.size(); ++i) j["lambda" + std::to_string(i)] = p.lambda[i];
  for (std::size_t i = 0; i < p.nabla.size(); ++i) j["nabla" + std::to_string(i)] = p.nabla[i];
  j["nabla"] = p.nabla_bell;
  j["zeta0"] = p.zeta_m[0];
  j["zeta1"] = p.zeta_m[1];
  j["zeta"] = p.zeta;
  return j;
}

Json verification_json(const VerificationReport& r) {
  Json j;
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back({{"stage", s.stage}, {"fidelity", s.fidelity}});
  j["stages"] = stages;
  j["worst_fidelity"] = r.worst_fidelity;
  j["pass"] = r.pass;
  j["compact_form_fidelity"] =
      r.compact_form_fidelity ? Json(*r.compact_form_fidelity) : Json(nullptr);
  j["forms_agree"] = r.forms_agree;
  return j;
}

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Success:
      return "success";
    case OutcomeKind::AbsorbedByElectron:
      return "absorbed";
    case OutcomeKind::DiscardedAtDetector:
      return "discarded";
  }
  return "unknown";
}

std::string to_string(AbsorberModel model) {
  return model == AbsorberModel::Coherent ? "coherent" : "per-cycle-born";
}

}  // namespace cct
