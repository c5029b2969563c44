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

// Monte Carlo trajectories of the Zeno gates and of the full protocol.
//
// Electron-photon states live on dims {2, 2}: electron digit 0 = absence,
// 1 = presence; photon digit 0 = H, 1 = V.
//
// Two absorber models:
//   Coherent      the joint state is evolved cycle by cycle; absorption is
//                 sampled from the squared amplitude of the presence branch
//                 in the channel, and the no-jump branch is renormalized.
//   PerCycleBorn  each cycle absorbs with the fixed probability used by the
//                 closed forms in zeno.hpp; the electron branch weights are
//                 held fixed until a final collapse.

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "cct/parallel.hpp"
#include "cct/protocol.hpp"
#include "cct/zeno.hpp"

namespace cct {

enum class Polarization { H = 0, V = 1 };
enum class AbsorberModel { Coherent, PerCycleBorn };
enum class OutcomeKind { Success, AbsorbedByElectron, DiscardedAtDetector };

/// absence|0> + presence|1> of the quantum absorptive object.
struct Absorber {
  Complex absence{0.0, 0.0};
  Complex presence{1.0, 0.0};

  void validate() const;
  double absence_weight() const { return std::norm(absence); }
  double presence_weight() const { return std::norm(presence); }
};

inline constexpr Absorber kAbsent{{1.0, 0.0}, {0.0, 0.0}};
inline constexpr Absorber kPresent{{0.0, 0.0}, {1.0, 0.0}};

inline const Dims kElectronPhotonDims{kQubit, kQubit};

struct TrajectoryOutcome {
  OutcomeKind kind = OutcomeKind::Success;
  std::string_view stage;    // static label of the gate or stage that ended the run
  std::int64_t cycle_index = 0;  // 1-based cycle where the run ended; 0 when it ran to completion
  std::optional<StateVector> final_state;  // electron (x) photon; absent after absorption
  bool photon_entered_channel = false;
};

/// QZ gate in front of the absorber, read as a CEPI gate: success leaves the
/// electron in presence and the photon in `input`; the absence branch
/// rotates the photon to the other polarization and is discarded.
TrajectoryOutcome simulate_qz(const Absorber& absorber, Polarization input, std::int64_t N,
                              AbsorberModel model, RandomSource& rng);

/// CQZ gate with M outer and N inner cycles. Absence keeps the photon in
/// `input`; presence flips it. A superposed absorber ends entangled with the
/// photon: absence|0, input> + presence|1, flipped>.
TrajectoryOutcome simulate_cqz(const Absorber& absorber, Polarization input, std::int64_t M,
                               std::int64_t N, AbsorberModel model, RandomSource& rng);

/// Ideal success outputs the simulations are scored against.
StateVector ideal_qz_output(Polarization input);
StateVector ideal_cqz_output(const Absorber& absorber, Polarization input);

struct MonteCarloReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t absorbed = 0;
  std::uint64_t discarded = 0;
  double abort_rate = 0.0;      // 1 - successes / trials
  double standard_error = 0.0;  // sqrt(p (1 - p) / trials) of abort_rate
  std::optional<double> conditional_fidelity;  // mean over successes; absent if none
  std::uint64_t seed = 0;
  std::uint64_t counterfactual_violations = 0;  // successes with photon_entered_channel
};

MonteCarloReport run_qz_trials(const Absorber& absorber, Polarization input, std::int64_t N,
                               AbsorberModel model, std::uint64_t trials, std::uint64_t seed,
                               ExecutionPolicy policy = ExecutionPolicy::Parallel);

MonteCarloReport run_cqz_trials(const Absorber& absorber, Polarization input, std::int64_t M,
                                std::int64_t N, AbsorberModel model, std::uint64_t trials,
                                std::uint64_t seed,
                                ExecutionPolicy policy = ExecutionPolicy::Parallel);

using ProtocolInput = std::variant<GeneralInput, BellInput>;

/// Stage-composed protocol campaign. Each trial draws every counterfactual
/// stage cycle by cycle with the per-cycle probabilities of the closed forms
/// (general: lambda2, lambda3, lambda4, then m, then lambda5 when m = 1;
/// Bell: lambda6, lambda7), aborting on the first failure. Surviving trials
/// carry the exact logical output, scored against the expected output.
MonteCarloReport simulate_cct(const CycleConfig& cfg, const ProtocolInput& input,
                              std::uint64_t trials, std::uint64_t seed,
                              ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Abort rate the stage-composed campaign converges to: the mean of zeta_0
/// and zeta_1 weighted by the Born weights of m (general), or zeta (Bell).
double expected_abort_rate(const CycleConfig& cfg, const ProtocolInput& input);

}  // namespace cct
