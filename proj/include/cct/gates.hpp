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

// Named operators of the concealed-telecomputation circuits.
//
// Register order is always A (Alice's target qubit), B (Bob's control
// qubit), C (Bob's ancilla: a qutrit in the general protocol, a qubit in the
// Bell-type protocol). Two-factor operators on B and C carry dims {2, 3} or
// {2, 2}; three-factor operators carry {2, 2, 3} or {2, 2, 2}.
//
// Every composite operator is written as a sum of outer products over basis
// labels rather than assembled from primitive gates, so each one can be
// checked term by term against its defining expression.
//
// Alice-side operators (toffoli, q1, q2, q3, tilde_q1, tilde_q2) take no
// rotation parameters: the unitary being applied never reaches her side.

#include <cstddef>

#include "cct/hilbert.hpp"

namespace cct {

/// Euler angles of U = R_z(phi) R_y(theta) R_z(varphi), in radians. No range
/// reduction is performed.
struct EulerAngles {
  double phi = 0.0;
  double theta = 0.0;
  double varphi = 0.0;
};

inline constexpr std::size_t kQubit = 2;
inline constexpr std::size_t kQutrit = 3;

Operator identity(std::size_t dim);
Operator pauli_x();
Operator pauli_z();
Operator hadamard();

/// |j><k| on a single d-level system.
Operator ket_bra(std::size_t dim, std::size_t j, std::size_t k);

Operator rotation_y(double theta);
Operator rotation_z(double varphi);
Operator euler_unitary(const EulerAngles& angles);

/// R_z(phi) R_y((-1)^m theta) R_z(varphi). Throws std::out_of_range unless
/// m is 0 or 1.
Operator u_m(const EulerAngles& angles, int m);

/// I (x) |0><0| + U (x) |1><1| with the target first. A non-unitary U is
/// accepted (useful in tests); callers wanting a check use is_unitary().
Operator controlled_unitary(const Operator& u);

/// diag(1, 1, 1, -1) on two qubits.
Operator controlled_z();

/// Bob's local CNOT with B as control and the ancilla as target. On a qutrit
/// ancilla the flip exchanges |0> and |1> and leaves |2> alone.
Operator cnot_to_ancilla(std::size_t ancilla_dim);

/// Hadamard on span{|0>, |1>} of a qutrit, identity on |2>.
Operator hadamard_on_qutrit();

// Bob's first local operation V1(U) = V14 V13 V12 V11 on B (x) C (qutrit).
Operator v11(const EulerAngles& angles);
Operator v12();
Operator v13(const EulerAngles& angles);
Operator v14();
Operator v1(const EulerAngles& angles);

/// Bob's second local operation: identity for B = 0, cyclic relabeling of the
/// ancilla (1 -> 0, 2 -> 1, 0 -> 2) for B = 1.
Operator v2();

/// Flips A exactly when (B, C) is (1, 1) or (1, 2). Acts on A (x) B (x) C.
Operator q1();

/// Flips B exactly when (A, C) is (0, 1) or (1, 2). Acts on A (x) B (x) C.
Operator q2();

/// Identity for m = 0; (Z (x) X) Z_c (I (x) X) on A (x) B for m = 1.
Operator q3(int m);

/// Flips B iff A = 1 and C = 1. Acts on A (x) B (x) C with a qutrit C.
Operator toffoli();

/// Bell-type protocol, l-class inputs: I (x) |0><0| + X^(1-l) U X^l (x) |1><1|
/// on B (x) C with a qubit ancilla.
Operator tilde_v1(const Operator& u, int ell);
Operator tilde_v1(const EulerAngles& angles, int ell);

/// Flips A exactly when (B, C) = (1, 1). Acts on A (x) B (x) C, all qubits.
Operator tilde_q1();

/// For C = 1 applies X^(1-l) to B if A = 1 and X^l to B if A = 0.
Operator tilde_q2(int ell);

}  // namespace cct
