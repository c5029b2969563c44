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

#include "cct/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cct {
namespace {

const Complex kI{0.0, 1.0};

void require_bit(int value, const char* name) {
  if (value != 0 && value != 1) {
    throw std::out_of_range(std::string(name) + " must be 0 or 1, got " + std::to_string(value));
  }
}

Operator x_power(int k) { return (k % 2 == 0) ? identity(kQubit) : pauli_x(); }

Operator kron(const Operator& a, const Operator& b, const Operator& c) {
  return tensor(tensor(a, b), c);
}

// |j><j| on a d-level system.
Operator proj(std::size_t dim, std::size_t j) { return ket_bra(dim, j, j); }

}  // namespace

Operator identity(std::size_t dim) { return Operator::identity({dim}); }

Operator pauli_x() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return Operator({kQubit}, m);
}

Operator pauli_z() {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return Operator({kQubit}, m);
}

Operator hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m(2, 2);
  m << r, r, r, -r;
  return Operator({kQubit}, m);
}

Operator ket_bra(std::size_t dim, std::size_t j, std::size_t k) {
  return Operator::outer({dim}, {j}, {k});
}

Operator rotation_y(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::MatrixXcd m(2, 2);
  m << c, -s, s, c;
  return Operator({kQubit}, m);
}

Operator rotation_z(double varphi) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = std::exp(-kI * varphi / 2.0);
  m(1, 1) = std::exp(kI * varphi / 2.0);
  return Operator({kQubit}, m);
}

Operator euler_unitary(const EulerAngles& angles) {
  return rotation_z(angles.phi) * rotation_y(angles.theta) * rotation_z(angles.varphi);
}

Operator u_m(const EulerAngles& angles, int m) {
  require_bit(m, "measurement outcome m");
  const double sign = (m == 0) ? 1.0 : -1.0;
  return rotation_z(angles.phi) * rotation_y(sign * angles.theta) * rotation_z(angles.varphi);
}

Operator controlled_unitary(const Operator& u) {
  if (u.dims() != Dims{kQubit}) throw std::invalid_argument("controlled_unitary: U must be 2x2");
  return tensor(identity(kQubit), proj(kQubit, 0)) + tensor(u, proj(kQubit, 1));
}

Operator controlled_z() {
  return tensor(proj(kQubit, 0), identity(kQubit)) + tensor(proj(kQubit, 1), pauli_z());
}

Operator cnot_to_ancilla(std::size_t ancilla_dim) {
  if (ancilla_dim < 2) throw std::invalid_argument("cnot_to_ancilla: ancilla needs >= 2 levels");
  Operator flip = ket_bra(ancilla_dim, 0, 1) + ket_bra(ancilla_dim, 1, 0);
  for (std::size_t k = 2; k < ancilla_dim; ++k) flip = flip + proj(ancilla_dim, k);
  return tensor(proj(kQubit, 0), identity(ancilla_dim)) + tensor(proj(kQubit, 1), flip);
}

Operator hadamard_on_qutrit() {
  const double r = 1.0 / std::sqrt(2.0);
  return (ket_bra(kQutrit, 0, 0) + ket_bra(kQutrit, 0, 1) + ket_bra(kQutrit, 1, 0)) * r +
         ket_bra(kQutrit, 1, 1) * (-r) + ket_bra(kQutrit, 2, 2);
}

Operator v11(const EulerAngles& angles) {
  return tensor(identity(kQubit), proj(kQutrit, 0)) +
         tensor(rotation_z(angles.varphi) * pauli_x(), proj(kQutrit, 1)) +
         tensor(identity(kQubit), proj(kQutrit, 2));
}

Operator v12() {
  const Dims bc{kQubit, kQutrit};
  return tensor(proj(kQubit, 0), identity(kQutrit)) + Operator::outer(bc, {1, 0}, {1, 0}) +
         Operator::outer(bc, {1, 2}, {1, 1}) + Operator::outer(bc, {1, 1}, {1, 2});
}

Operator v13(const EulerAngles& angles) {
  const Operator b2 = rotation_z(angles.phi) * rotation_y(angles.theta);
  return tensor(identity(kQubit), proj(kQutrit, 0)) + tensor(b2, proj(kQutrit, 1)) +
         tensor(b2, proj(kQutrit, 2));
}

Operator v14() {
  return tensor(identity(kQubit), proj(kQutrit, 0) + proj(kQutrit, 1)) +
         tensor(pauli_x(), proj(kQutrit, 2));
}

Operator v1(const EulerAngles& angles) { return v14() * v13(angles) * v12() * v11(angles); }

Operator v2() {
  const Operator cycle = ket_bra(kQutrit, 0, 1) + ket_bra(kQutrit, 1, 2) + ket_bra(kQutrit, 2, 0);
  return tensor(proj(kQubit, 0), identity(kQutrit)) + tensor(proj(kQubit, 1), cycle);
}

Operator q1() {
  const Dims bc{kQubit, kQutrit};
  const Operator keep = Operator::outer(bc, {0, 0}, {0, 0}) + Operator::outer(bc, {0, 1}, {0, 1}) +
                        Operator::outer(bc, {1, 0}, {1, 0}) + Operator::outer(bc, {0, 2}, {0, 2});
  const Operator flip = Operator::outer(bc, {1, 1}, {1, 1}) + Operator::outer(bc, {1, 2}, {1, 2});
  return tensor(identity(kQubit), keep) + tensor(pauli_x(), flip);
}

Operator q2() {
  const Operator id_a = proj(kQubit, 0) + proj(kQubit, 1);
  return kron(id_a, identity(kQubit), proj(kQutrit, 0)) +
         kron(proj(kQubit, 1), identity(kQubit), proj(kQutrit, 1)) +
         kron(proj(kQubit, 0), identity(kQubit), proj(kQutrit, 2)) +
         kron(proj(kQubit, 0), pauli_x(), proj(kQutrit, 1)) +
         kron(proj(kQubit, 1), pauli_x(), proj(kQutrit, 2));
}

Operator q3(int m) {
  require_bit(m, "measurement outcome m");
  if (m == 0) return Operator::identity({kQubit, kQubit});
  return tensor(pauli_z(), pauli_x()) * controlled_z() * tensor(identity(kQubit), pauli_x());
}

Operator toffoli() {
  return kron(identity(kQubit), identity(kQubit), proj(kQutrit, 0) + proj(kQutrit, 2)) +
         kron(proj(kQubit, 0), identity(kQubit), proj(kQutrit, 1)) +
         kron(proj(kQubit, 1), pauli_x(), proj(kQutrit, 1));
}

Operator tilde_v1(const Operator& u, int ell) {
  require_bit(ell, "class index ell");
  if (u.dims() != Dims{kQubit}) throw std::invalid_argument("tilde_v1: U must be 2x2");
  return tensor(identity(kQubit), proj(kQubit, 0)) +
         tensor(x_power(1 - ell) * u * x_power(ell), proj(kQubit, 1));
}

Operator tilde_v1(const EulerAngles& angles, int ell) {
  return tilde_v1(euler_unitary(angles), ell);
}

Operator tilde_q1() {
  const Dims bc{kQubit, kQubit};
  const Operator keep = Operator::outer(bc, {0, 0}, {0, 0}) + Operator::outer(bc, {0, 1}, {0, 1}) +
                        Operator::outer(bc, {1, 0}, {1, 0});
  return tensor(identity(kQubit), keep) + tensor(pauli_x(), Operator::outer(bc, {1, 1}, {1, 1}));
}

Operator tilde_q2(int ell) {
  require_bit(ell, "class index ell");
  const Operator id_a = proj(kQubit, 0) + proj(kQubit, 1);
  return kron(id_a, identity(kQubit), proj(kQubit, 0)) +
         kron(proj(kQubit, 1), x_power(1 - ell), proj(kQubit, 1)) +
         kron(proj(kQubit, 0), x_power(ell), proj(kQubit, 1));
}

}  // namespace cct
