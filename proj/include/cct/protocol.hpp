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

// Exact state-vector execution of the concealed telecomputation protocol.
//
// General inputs run on A (x) B (x) C with a qutrit ancilla:
//   CNOT(B->C), T, V1(U) on BC, Q1, Q2, V2 on BC, H on C, measure C -> m,
//   Q3(m) on AB.
// The output is gamma |psi>_A |0>_B + delta (U_m |psi>_A) |1>_B.
//
// Bell-type inputs (l-class states) run on three qubits:
//   CNOT(B->C), tilde V1(U), tilde Q1, tilde Q2, CNOT(B->C)
// and deterministically leave (I (x) |0><0| + U (x) |1><1|)|psi0>_AB (x) |0>_C.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cct/gates.hpp"
#include "cct/hilbert.hpp"
#include "cct/parallel.hpp"
#include "cct/random.hpp"

namespace cct {

/// |psi>_A = alpha|0> + beta|1>, |psi>_B = gamma|0> + delta|1>.
struct GeneralInput {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
  Complex gamma{1.0, 0.0};
  Complex delta{0.0, 0.0};
  EulerAngles angles{};

  /// Throws std::invalid_argument naming the offending pair when either
  /// qubit is not normalized within kNormTolerance.
  void validate() const;
  StateVector alice_state() const;
  StateVector bob_state() const;
};

/// l = 0: alpha|00> +- beta|11>   (c0 = alpha, c1 = beta)
/// l = 1: gamma|01> +- delta|10>  (c0 = gamma, c1 = delta)
struct BellInput {
  int ell = 0;
  int sign = +1;
  Complex c0{1.0, 0.0};
  Complex c1{0.0, 0.0};
  EulerAngles angles{};

  void validate() const;
  /// psi0 on A (x) B.
  StateVector initial_state() const;
};

/// Subsystem positions in every three-party register.
inline constexpr std::size_t kAlice = 0;
inline constexpr std::size_t kBob = 1;
inline constexpr std::size_t kAncilla = 2;

inline const Dims kGeneralDims{kQubit, kQubit, kQutrit};
inline const Dims kBellDims{kQubit, kQubit, kQubit};
inline const Dims kOutputDims{kQubit, kQubit};

/// Every intermediate state of one protocol run. For the Bell-type protocol
/// `m` and `psi5m` are absent, `pre_measurement` holds the final A(x)B(x)C
/// state and `outcome_probability` is 1.
struct Transcript {
  StateVector psi0;  // A (x) B (x) C, ancilla in |0>
  StateVector psi1;  // after CNOT(B->C)
  StateVector psi2;  // after T (general) / tilde V1 (Bell)
  StateVector psi3;  // after V1 (general) / tilde Q1 (Bell)
  StateVector psi4;  // after Q1 and Q2 (general) / tilde Q2 (Bell)
  StateVector pre_measurement;  // after V2 and H (general) / final CNOT (Bell)
  std::array<double, 3> ancilla_weights{};  // Born weights of C in pre_measurement
  std::optional<int> m;
  std::optional<StateVector> psi5m;  // A (x) B, renormalized
  StateVector psi6m;                 // A (x) B output
  double outcome_probability = 1.0;
};

struct StageFidelity {
  std::string stage;
  double fidelity = 0.0;
};

struct VerificationReport {
  std::vector<StageFidelity> stages;
  double worst_fidelity = 1.0;
  bool pass = false;
  /// Fidelity of psi6m against the compact U_m form, reported separately
  /// from the term-by-term expansion so disagreement is visible.
  std::optional<double> compact_form_fidelity;
  bool forms_agree = true;
};

/// Runs the general protocol and samples m from the Born rule.
Transcript run_general(const GeneralInput& input, RandomSource& rng);

/// Runs the general protocol post-selected on outcome m (0 or 1).
Transcript run_general_postselected(const GeneralInput& input, int m);

/// gamma (I|psi>_A) |0>_B + delta (U_m|psi>_A) |1>_B, renormalized.
StateVector expected_output_general(const GeneralInput& input, int m);

/// Compares every stored stage with closed forms built directly from the
/// input amplitudes (not by replaying operators).
VerificationReport verify_general(const Transcript& t, const GeneralInput& input);

Transcript run_bell(const BellInput& input);

/// (I (x) |0><0| + U (x) |1><1|) psi0 on A (x) B.
StateVector expected_output_bell(const BellInput& input);

VerificationReport verify_bell(const Transcript& t, const BellInput& input);

struct OutcomeFrequencies {
  std::size_t trials = 0;
  std::size_t count0 = 0;
  std::size_t count1 = 0;
  double frequency0() const { return trials ? static_cast<double>(count0) / trials : 0.0; }
  double frequency1() const { return trials ? static_cast<double>(count1) / trials : 0.0; }
};

/// Repeats run_general with per-trial streams derived from `seed`.
OutcomeFrequencies outcome_statistics(const GeneralInput& input, std::size_t trials,
                                      std::uint64_t seed,
                                      ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Seeded random inputs for property checks: complex Gaussian amplitudes,
/// angles uniform in [-2 pi, 2 pi).
EulerAngles random_angles(RandomSource& rng);
GeneralInput random_general_input(RandomSource& rng);
BellInput random_bell_input(RandomSource& rng, int ell, int sign);

}  // namespace cct
