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

#include "cct/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace cct {
namespace {

const Complex kI{0.0, 1.0};

// Parameter-free operators are built once and shared read-only.
const Operator& cached_cnot_qutrit() {
  static const Operator op = cnot_to_ancilla(kQutrit);
  return op;
}
const Operator& cached_cnot_qubit() {
  static const Operator op = cnot_to_ancilla(kQubit);
  return op;
}
const Operator& cached_toffoli() {
  static const Operator op = toffoli();
  return op;
}
const Operator& cached_q1() {
  static const Operator op = q1();
  return op;
}
const Operator& cached_q2() {
  static const Operator op = q2();
  return op;
}
const Operator& cached_v2() {
  static const Operator op = v2();
  return op;
}
const Operator& cached_h3() {
  static const Operator op = hadamard_on_qutrit();
  return op;
}
const Operator& cached_q3(int m) {
  static const Operator op0 = q3(0);
  static const Operator op1 = q3(1);
  return m == 0 ? op0 : op1;
}
const Operator& cached_tilde_q1() {
  static const Operator op = tilde_q1();
  return op;
}
const Operator& cached_tilde_q2(int ell) {
  static const Operator op0 = tilde_q2(0);
  static const Operator op1 = tilde_q2(1);
  return ell == 0 ? op0 : op1;
}

void require_unit(Complex a, Complex b, const char* names) {
  const double n = std::norm(a) + std::norm(b);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw std::invalid_argument(std::string(names) + ": squared norm is " + std::to_string(n) +
                                ", expected 1");
  }
}

// Everything up to the ancilla measurement.
Transcript run_general_until_measurement(const GeneralInput& input) {
  input.validate();
  Transcript t;
  t.psi0 = tensor(tensor(input.alice_state(), input.bob_state()), StateVector::basis({kQutrit}, {0}));
  t.psi1 = apply(cached_cnot_qutrit(), t.psi0, {kBob, kAncilla});
  t.psi2 = cached_toffoli() * t.psi1;
  t.psi3 = apply(v1(input.angles), t.psi2, {kBob, kAncilla});
  t.psi4 = cached_q2() * (cached_q1() * t.psi3);
  t.pre_measurement =
      apply(cached_h3(), apply(cached_v2(), t.psi4, {kBob, kAncilla}), {kAncilla});
  const auto w = marginal_probabilities(t.pre_measurement, kAncilla);
  std::copy(w.begin(), w.end(), t.ancilla_weights.begin());
  if (t.ancilla_weights[2] > kNormTolerance) {
    throw std::logic_error("run_general: ancilla weight on |2> is " +
                           std::to_string(t.ancilla_weights[2]) + " before measurement");
  }
  return t;
}

void finish_general(Transcript& t, int m) {
  const Measurement collapsed = project(t.pre_measurement, kAncilla, static_cast<std::size_t>(m));
  t.m = m;
  t.outcome_probability = t.ancilla_weights[static_cast<std::size_t>(m)];
  t.psi5m = slice(collapsed.collapsed, kAncilla, static_cast<std::size_t>(m));
  t.psi6m = apply(cached_q3(m), *t.psi5m, {kAlice, kBob});
}

// Phases of the four V1 branches, named by the Euler angles they carry.
struct BranchPhases {
  Complex c1, s1, c2, s2;
};

BranchPhases branch_phases(const EulerAngles& a) {
  const double c = std::cos(a.theta / 2.0);
  const double s = std::sin(a.theta / 2.0);
  return {std::exp(-kI * (a.varphi + a.phi) / 2.0) * c, std::exp(-kI * (a.varphi - a.phi) / 2.0) * s,
          std::exp(kI * (a.varphi + a.phi) / 2.0) * c, std::exp(kI * (a.varphi - a.phi) / 2.0) * s};
}

StateVector with_ancilla_zero(const StateVector& ab, const Dims& dims) {
  StateVector out = StateVector::zero(dims);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) out.add_term({a, b, 0}, ab.amplitude({a, b}));
  }
  return out;
}

void add_stage(VerificationReport& r, std::string name, const StateVector& actual,
               const StateVector& expected) {
  double f = 0.0;
  if (actual.dims() == expected.dims() && expected.squared_norm() > 0.0) {
    f = fidelity(actual, expected.normalized());
    // A stored state that is not normalized cannot match its closed form.
    if (!actual.is_normalized()) f = std::min(f, 1.0 - std::abs(actual.squared_norm() - 1.0));
  }
  r.stages.push_back({std::move(name), f});
}

void finalize(VerificationReport& r) {
  r.worst_fidelity = 1.0;
  for (const auto& s : r.stages) r.worst_fidelity = std::min(r.worst_fidelity, s.fidelity);
  r.pass = r.worst_fidelity >= 1.0 - kFidelityTolerance;
}

}  // namespace

// ---------------------------------------------------------------- inputs

void GeneralInput::validate() const {
  require_unit(alpha, beta, "alpha, beta");
  require_unit(gamma, delta, "gamma, delta");
}

StateVector GeneralInput::alice_state() const { return StateVector({kQubit}, {alpha, beta}); }
StateVector GeneralInput::bob_state() const { return StateVector({kQubit}, {gamma, delta}); }

void BellInput::validate() const {
  if (ell != 0 && ell != 1) throw std::invalid_argument("ell must be 0 or 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  require_unit(c0, c1, "c0, c1");
}

StateVector BellInput::initial_state() const {
  StateVector s = StateVector::zero(kOutputDims);
  const double sg = static_cast<double>(sign);
  if (ell == 0) {
    s.add_term({0, 0}, c0);
    s.add_term({1, 1}, sg * c1);
  } else {
    s.add_term({0, 1}, c0);
    s.add_term({1, 0}, sg * c1);
  }
  return s;
}

// --------------------------------------------------------- general protocol

Transcript run_general(const GeneralInput& input, RandomSource& rng) {
  Transcript t = run_general_until_measurement(input);
  // The |2> branch carries no weight (checked above); sample between 0 and 1.
  const double w0 = t.ancilla_weights[0];
  const double w1 = t.ancilla_weights[1];
  const int m = (uniform01(rng) * (w0 + w1) < w0) ? 0 : 1;
  finish_general(t, m);
  return t;
}

Transcript run_general_postselected(const GeneralInput& input, int m) {
  if (m != 0 && m != 1) throw std::out_of_range("run_general_postselected: m must be 0 or 1");
  Transcript t = run_general_until_measurement(input);
  finish_general(t, m);
  return t;
}

StateVector expected_output_general(const GeneralInput& input, int m) {
  const StateVector psi_a = input.alice_state();
  const StateVector rotated = u_m(input.angles, m) * psi_a;
  const StateVector out = tensor(psi_a, StateVector::basis({kQubit}, {0})) * input.gamma +
                          tensor(rotated, StateVector::basis({kQubit}, {1})) * input.delta;
  return out.normalized();
}

VerificationReport verify_general(const Transcript& t, const GeneralInput& input) {
  const Complex al = input.alpha, be = input.beta, ga = input.gamma, de = input.delta;
  const auto [c1, s1, c2, s2] = branch_phases(input.angles);
  const Complex psi_a[2] = {al, be};
  VerificationReport r;

  StateVector e0 = StateVector::zero(kGeneralDims);
  StateVector e1 = StateVector::zero(kGeneralDims);
  for (std::size_t a = 0; a < 2; ++a) {
    e0.add_term({a, 0, 0}, psi_a[a] * ga);
    e0.add_term({a, 1, 0}, psi_a[a] * de);
    e1.add_term({a, 0, 0}, psi_a[a] * ga);
    e1.add_term({a, 1, 1}, psi_a[a] * de);
  }
  add_stage(r, "psi0", t.psi0, e0);
  add_stage(r, "psi1", t.psi1, e1);

  StateVector e2 = StateVector::zero(kGeneralDims);
  StateVector e3 = StateVector::zero(kGeneralDims);
  StateVector e4 = StateVector::zero(kGeneralDims);
  for (std::size_t a = 0; a < 2; ++a) {
    e2.add_term({a, 0, 0}, ga * psi_a[a]);
    e3.add_term({a, 0, 0}, ga * psi_a[a]);
    e4.add_term({a, 0, 0}, ga * psi_a[a]);
  }
  e2.add_term({0, 1, 1}, de * al);
  e2.add_term({1, 0, 1}, de * be);

  e3.add_term({0, 0, 1}, de * al * c1);
  e3.add_term({0, 1, 1}, de * al * s1);
  e3.add_term({1, 0, 2}, de * be * c2);
  e3.add_term({1, 1, 2}, -de * be * s2);

  e4.add_term({0, 1, 1}, de * al * c1);
  e4.add_term({1, 1, 1}, de * al * s1);
  e4.add_term({1, 1, 2}, de * be * c2);
  e4.add_term({0, 1, 2}, -de * be * s2);

  add_stage(r, "psi2", t.psi2, e2);
  add_stage(r, "psi3", t.psi3, e3);
  add_stage(r, "psi4", t.psi4, e4);

  if (!t.m || !t.psi5m) {
    r.stages.push_back({"psi5m", 0.0});
    finalize(r);
    return r;
  }
  const int m = *t.m;
  const double sign_m = (m == 0) ? 1.0 : -1.0;  // (-1)^m; (-1)^(1-m) = -sign_m

  StateVector e5 = StateVector::zero(kOutputDims);
  StateVector e6 = StateVector::zero(kOutputDims);
  for (std::size_t a = 0; a < 2; ++a) {
    e5.add_term({a, 0}, ga * psi_a[a]);
    e6.add_term({a, 0}, ga * psi_a[a]);
  }
  e5.add_term({0, 1}, de * al * c1);
  e5.add_term({1, 1}, de * al * s1);
  e5.add_term({1, 1}, sign_m * de * be * c2);
  e5.add_term({0, 1}, -sign_m * de * be * s2);

  e6.add_term({0, 1}, de * al * c1);
  e6.add_term({1, 1}, sign_m * de * al * s1);
  e6.add_term({1, 1}, de * be * c2);
  e6.add_term({0, 1}, -sign_m * de * be * s2);

  add_stage(r, "psi5m", *t.psi5m, e5);
  add_stage(r, "psi6m", t.psi6m, e6);

  const StateVector compact = expected_output_general(input, m);
  r.compact_form_fidelity = fidelity(t.psi6m, compact);
  r.forms_agree = fidelity(e6.normalized(), compact) >= 1.0 - kFidelityTolerance;
  r.stages.push_back({"psi6m-compact", *r.compact_form_fidelity});
  finalize(r);
  return r;
}

// ------------------------------------------------------- Bell-type protocol

Transcript run_bell(const BellInput& input) {
  input.validate();
  Transcript t;
  t.psi0 = tensor(input.initial_state(), StateVector::basis({kQubit}, {0}));
  t.psi1 = apply(cached_cnot_qubit(), t.psi0, {kBob, kAncilla});
  t.psi2 = apply(tilde_v1(input.angles, input.ell), t.psi1, {kBob, kAncilla});
  t.psi3 = cached_tilde_q1() * t.psi2;
  t.psi4 = cached_tilde_q2(input.ell) * t.psi3;
  t.pre_measurement = apply(cached_cnot_qubit(), t.psi4, {kBob, kAncilla});
  const auto w = marginal_probabilities(t.pre_measurement, kAncilla);
  t.ancilla_weights = {w[0], w[1], 0.0};
  if (w[0] < 1.0 - kFidelityTolerance) {
    throw std::logic_error("run_bell: ancilla is not left in |0> (weight " + std::to_string(w[0]) +
                           ")");
  }
  t.psi6m = slice(t.pre_measurement, kAncilla, 0).normalized();
  t.outcome_probability = 1.0;
  return t;
}

StateVector expected_output_bell(const BellInput& input) {
  const Operator u = euler_unitary(input.angles);
  const double sg = static_cast<double>(input.sign);
  StateVector out = StateVector::zero(kOutputDims);
  if (input.ell == 0) {
    out.add_term({0, 0}, input.c0);
    out.add_term({0, 1}, sg * input.c1 * u(0, 1));
    out.add_term({1, 1}, sg * input.c1 * u(1, 1));
  } else {
    out.add_term({0, 1}, input.c0 * u(0, 0));
    out.add_term({1, 1}, input.c0 * u(1, 0));
    out.add_term({1, 0}, sg * input.c1);
  }
  return out.normalized();
}

VerificationReport verify_bell(const Transcript& t, const BellInput& input) {
  const Operator u = euler_unitary(input.angles);
  const double sg = static_cast<double>(input.sign);
  VerificationReport r;
  StateVector e1 = StateVector::zero(kBellDims);
  StateVector e2 = StateVector::zero(kBellDims);
  StateVector e3 = StateVector::zero(kBellDims);
  StateVector e4 = StateVector::zero(kBellDims);
  if (input.ell == 0) {
    const Complex a = input.c0, b = sg * input.c1;
    e1.add_term({0, 0, 0}, a);
    e1.add_term({1, 1, 1}, b);
    e2.add_term({0, 0, 0}, a);
    e2.add_term({1, 1, 1}, b * u(0, 1));
    e2.add_term({1, 0, 1}, b * u(1, 1));
    e3.add_term({0, 0, 0}, a);
    e3.add_term({0, 1, 1}, b * u(0, 1));
    e3.add_term({1, 0, 1}, b * u(1, 1));
    e4.add_term({0, 0, 0}, a);
    e4.add_term({0, 1, 1}, b * u(0, 1));
    e4.add_term({1, 1, 1}, b * u(1, 1));
  } else {
    const Complex g = input.c0, d = sg * input.c1;
    e1.add_term({0, 1, 1}, g);
    e1.add_term({1, 0, 0}, d);
    e2.add_term({1, 0, 0}, d);
    e2.add_term({0, 0, 1}, g * u(0, 0));
    e2.add_term({0, 1, 1}, g * u(1, 0));
    e3.add_term({1, 0, 0}, d);
    e3.add_term({0, 0, 1}, g * u(0, 0));
    e3.add_term({1, 1, 1}, g * u(1, 0));
    e4.add_term({1, 0, 0}, d);
    e4.add_term({0, 1, 1}, g * u(0, 0));
    e4.add_term({1, 1, 1}, g * u(1, 0));
  }
  const StateVector expected = expected_output_bell(input);
  add_stage(r, "psi0", t.psi0, with_ancilla_zero(input.initial_state(), kBellDims));
  add_stage(r, "psi1", t.psi1, e1);
  add_stage(r, "psi2", t.psi2, e2);
  add_stage(r, "psi3", t.psi3, e3);
  add_stage(r, "psi4", t.psi4, e4);
  add_stage(r, "final", t.pre_measurement, with_ancilla_zero(expected, kBellDims));
  add_stage(r, "output", t.psi6m, expected);
  finalize(r);
  return r;
}

// ----------------------------------------------------------------- sampling

OutcomeFrequencies outcome_statistics(const GeneralInput& input, std::size_t trials,
                                      std::uint64_t seed, ExecutionPolicy policy) {
  if (trials == 0) throw std::invalid_argument("outcome_statistics: trials must be >= 1");
  input.validate();
  const auto outcomes = map_trials<unsigned char>(policy, trials, [&](std::uint64_t i) {
    RandomSource rng = stream_for(seed, i);
    return static_cast<unsigned char>(*run_general(input, rng).m);
  });
  OutcomeFrequencies f;
  f.trials = trials;
  f.count1 = static_cast<std::size_t>(std::count(outcomes.begin(), outcomes.end(), 1));
  f.count0 = trials - f.count1;
  return f;
}

EulerAngles random_angles(RandomSource& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  auto draw = [&] { return -two_pi + 2.0 * two_pi * uniform01(rng); };
  EulerAngles a;
  a.phi = draw();
  a.theta = draw();
  a.varphi = draw();
  return a;
}

namespace {
// Box-Muller on uniform01 so draws do not depend on the library's normal
// distribution.
Complex gaussian_complex(RandomSource& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
}

std::pair<Complex, Complex> random_qubit(RandomSource& rng) {
  const Complex a = gaussian_complex(rng);
  const Complex b = gaussian_complex(rng);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}
}  // namespace

GeneralInput random_general_input(RandomSource& rng) {
  GeneralInput in;
  std::tie(in.alpha, in.beta) = random_qubit(rng);
  std::tie(in.gamma, in.delta) = random_qubit(rng);
  in.angles = random_angles(rng);
  return in;
}

BellInput random_bell_input(RandomSource& rng, int ell, int sign) {
  BellInput in;
  in.ell = ell;
  in.sign = sign;
  std::tie(in.c0, in.c1) = random_qubit(rng);
  in.angles = random_angles(rng);
  return in;
}

}  // namespace cct
