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

#include <gtest/gtest.h>

#include <cstring>
#include <numbers>

#include "cct/gates.hpp"
#include "cct/protocol.hpp"
#include "test_util.hpp"

namespace cct {
namespace {

using std::numbers::pi;
using testing::kR;
using testing::states_near;

GeneralInput input_of(Complex a, Complex b, Complex g, Complex d, EulerAngles angles) {
  GeneralInput in;
  in.alpha = a;
  in.beta = b;
  in.gamma = g;
  in.delta = d;
  in.angles = angles;
  return in;
}

TEST(General, IdentityAnglesGiveProductOutput) {
  const GeneralInput in = input_of(0.6, Complex(0, 0.8), kR, -kR, {0, 0, 0});
  for (int m : {0, 1}) {
    const Transcript t = run_general_postselected(in, m);
    EXPECT_NEAR(fidelity(t.psi6m, tensor(in.alice_state(), in.bob_state())), 1.0, 1e-10);
    EXPECT_TRUE(verify_general(t, in).pass);
  }
}

TEST(General, RemoteControlIsSeparable) {
  const GeneralInput in = input_of(Complex(0.28, 0.96), 0.0, 0.0, 1.0, {0.5, 1.9, -0.8});
  for (int m : {0, 1}) {
    const Transcript t = run_general_postselected(in, m);
    EXPECT_EQ(schmidt_rank(t.psi6m, {kAlice}), 1u);
    const StateVector a = apply(u_m(in.angles, m), in.alice_state(), {0});
    EXPECT_NEAR(fidelity(slice(t.psi6m, kBob, 1).normalized(), a), 1.0, 1e-10);
  }
}

TEST(General, RandomSeededInputsMatchClosedForm) {
  RandomSource rng(42);
  for (int i = 0; i < 50; ++i) {
    const GeneralInput in = random_general_input(rng);
    const Transcript t = run_general(in, rng);
    ASSERT_TRUE(t.m.has_value());
    EXPECT_NEAR(fidelity(t.psi6m, expected_output_general(in, *t.m)), 1.0, 1e-10);
    EXPECT_LT(t.ancilla_weights[2], 1e-12);
    EXPECT_NEAR(t.ancilla_weights[0], 0.5, 1e-12);
    EXPECT_NEAR(t.outcome_probability, 0.5, 1e-12);
    for (const StateVector* s : {&t.psi0, &t.psi1, &t.psi2, &t.psi3, &t.psi4, &t.pre_measurement, &t.psi6m}) {
      EXPECT_TRUE(s->is_normalized());
    }
    const VerificationReport v = verify_general(t, in);
    EXPECT_TRUE(v.pass) << "worst " << v.worst_fidelity;
    EXPECT_TRUE(v.forms_agree);
  }
}

TEST(General, TranscriptIsReplayable) {
  RandomSource rng(7);
  const GeneralInput in = random_general_input(rng);
  const Transcript t = run_general_postselected(in, 1);
  EXPECT_TRUE(states_near(apply(cnot_to_ancilla(3), t.psi0, {kBob, kAncilla}), t.psi1));
  EXPECT_TRUE(states_near(apply(toffoli(), t.psi1, {0, 1, 2}), t.psi2));
  EXPECT_TRUE(states_near(apply(v1(in.angles), t.psi2, {kBob, kAncilla}), t.psi3));
  EXPECT_TRUE(states_near(apply(q2(), apply(q1(), t.psi3, {0, 1, 2}), {0, 1, 2}), t.psi4));
}

TEST(General, ZeroAnglesPsi3) {
  // With U = I the V1 factors reduce so that psi3 is gamma psi_A |00> +
  // delta alpha |001> + delta beta |102>.
  const GeneralInput in = input_of(0.6, 0.8, Complex(0, kR), kR, {0, 0, 0});
  const Transcript t = run_general_postselected(in, 0);
  StateVector want = StateVector::zero(kGeneralDims);
  want.add_term({0, 0, 0}, in.gamma * in.alpha);
  want.add_term({1, 0, 0}, in.gamma * in.beta);
  want.add_term({0, 0, 1}, in.delta * in.alpha);
  want.add_term({1, 0, 2}, in.delta * in.beta);
  EXPECT_TRUE(states_near(t.psi3, want));
}

TEST(General, CorruptedPsi3FailsVerification) {
  RandomSource rng(3);
  const GeneralInput in = random_general_input(rng);
  Transcript t = run_general_postselected(in, 0);
  t.psi3 = apply(pauli_x(), t.psi3, {kAlice});
  EXPECT_FALSE(verify_general(t, in).pass);
}

TEST(ExpectedGeneral, Examples) {
  const GeneralInput a = input_of(0.6, 0.8, 1.0, 0.0, {0.3, 0.2, 0.1});
  EXPECT_TRUE(states_near(expected_output_general(a, 1), tensor(a.alice_state(), StateVector::basis({2}, {0}))));
  const GeneralInput b = input_of(0.6, 0.8, kR, kR, {0, 0, 0});
  EXPECT_TRUE(states_near(expected_output_general(b, 0), tensor(b.alice_state(), StateVector({2}, {kR, kR}))));
  const GeneralInput c = input_of(1.0, 0.0, 0.0, 1.0, {0, pi / 2, 0});
  EXPECT_TRUE(states_near(expected_output_general(c, 1), StateVector({2, 2}, {0, kR, 0, -kR})));
}

TEST(General, InvalidInputThrows) {
  RandomSource rng(1);
  EXPECT_THROW(run_general(input_of(1.0, 0.5, 1.0, 0.0, {}), rng), std::invalid_argument);
  EXPECT_THROW(run_general_postselected(input_of(1.0, 0.0, 1.0, 0.0, {}), 2), std::out_of_range);
}

TEST(OutcomeStatistics, BornHalf) {
  RandomSource rng(5);
  const GeneralInput in = random_general_input(rng);
  const OutcomeFrequencies f = outcome_statistics(in, 100000, 42);
  EXPECT_EQ(f.count0 + f.count1, 100000u);
  EXPECT_NEAR(f.frequency0(), 0.5, 4.0 * std::sqrt(0.25 / 1e5));
  const OutcomeFrequencies one = outcome_statistics(in, 1, 9);
  EXPECT_EQ(one.count0 + one.count1, 1u);
  EXPECT_DOUBLE_EQ(one.frequency0() + one.frequency1(), 1.0);
}

TEST(OutcomeStatistics, SerialEqualsParallel) {
  const GeneralInput in = input_of(kR, kR, kR, kR, {0.1, 0.2, 0.3});
  const auto s = outcome_statistics(in, 5000, 11, ExecutionPolicy::Serial);
  const auto p = outcome_statistics(in, 5000, 11, ExecutionPolicy::Parallel);
  EXPECT_EQ(s.count0, p.count0);
}

BellInput bell_of(int ell, int sign, Complex c0, Complex c1, EulerAngles angles) {
  BellInput in;
  in.ell = ell;
  in.sign = sign;
  in.c0 = c0;
  in.c1 = c1;
  in.angles = angles;
  return in;
}

TEST(Bell, IdentityLeavesInput) {
  const BellInput in = bell_of(0, +1, 0.6, 0.8, {0, 0, 0});
  const Transcript t = run_bell(in);
  EXPECT_TRUE(states_near(t.pre_measurement, tensor(in.initial_state(), StateVector::basis({2}, {0}))));
  EXPECT_TRUE(verify_bell(t, in).pass);
}

TEST(Bell, RotationYPi) {
  const Transcript t = run_bell(bell_of(0, +1, kR, kR, {0, pi, 0}));
  EXPECT_TRUE(states_near(t.psi6m, StateVector({2, 2}, {kR, -kR, 0, 0})));
}

TEST(Bell, MatchesControlledUnitaryOracle) {
  RandomSource rng(21);
  for (int ell : {0, 1}) {
    for (int sign : {+1, -1}) {
      for (int i = 0; i < 20; ++i) {
        const BellInput in = random_bell_input(rng, ell, sign);
        const Transcript t = run_bell(in);
        const StateVector oracle = controlled_unitary(euler_unitary(in.angles)) * in.initial_state();
        EXPECT_NEAR(fidelity(t.psi6m, oracle), 1.0, 1e-10);
        EXPECT_NEAR(fidelity(expected_output_bell(in), oracle), 1.0, 1e-10);
        EXPECT_NEAR(t.ancilla_weights[0], 1.0, 1e-10);
        EXPECT_TRUE(verify_bell(t, in).pass);
        const Transcript again = run_bell(in);
        EXPECT_EQ(std::memcmp(t.psi6m.amplitudes().data(), again.psi6m.amplitudes().data(),
                              t.psi6m.size() * sizeof(Complex)),
                  0);
      }
    }
  }
}

TEST(Bell, OneClassBlockAction) {
  const EulerAngles a{0.9, 0.4, -1.3};
  const BellInput in = bell_of(1, +1, 0.6, 0.8, a);
  const Operator u = euler_unitary(a);
  StateVector want = StateVector::zero(kOutputDims);
  want.add_term({0, 1}, 0.6 * u(0, 0));
  want.add_term({1, 1}, 0.6 * u(1, 0));
  want.add_term({1, 0}, 0.8);
  EXPECT_TRUE(states_near(expected_output_bell(in), want));
  EXPECT_FALSE(run_bell(in).m.has_value());
}

}  // namespace
}  // namespace cct
