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

// Finite-dimensional state machinery over mixed-radix registers.
//
// Index convention: big-endian mixed radix. For dims {2, 2, 3} (A, B, C) the
// basis ket |a b c> lives at index a*6 + b*3 + c, so printed labels read in
// the same order as the tensor factors. Subsystems are never permuted
// implicitly; every routine that touches a subset of subsystems takes the
// subsystem indices explicitly.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cct/random.hpp"

namespace cct {

using Complex = std::complex<double>;
using Dims = std::vector<std::size_t>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kUnitarityTolerance = 1e-12;
inline constexpr double kFidelityTolerance = 1e-10;

std::size_t total_dimension(const Dims& dims);

/// Mixed-radix digits of `index` (most significant first).
std::vector<std::size_t> digits_of(const Dims& dims, std::size_t index);

/// Inverse of digits_of.
std::size_t index_of(const Dims& dims, std::span<const std::size_t> digits);
std::size_t index_of(const Dims& dims, std::initializer_list<std::size_t> digits);

/// "|0 1 2>" style label; digits are concatenated when every dim is <= 10.
std::string basis_label(const Dims& dims, std::size_t index);

class StateVector {
 public:
  StateVector() = default;
  StateVector(Dims dims, Eigen::VectorXcd amplitudes);
  StateVector(Dims dims, std::initializer_list<Complex> amplitudes);

  static StateVector zero(Dims dims);
  static StateVector basis(Dims dims, std::initializer_list<std::size_t> digits);
  static StateVector basis_index(Dims dims, std::size_t index);

  const Dims& dims() const { return dims_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  std::size_t size() const { return static_cast<std::size_t>(amps_.size()); }
  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
  Complex amplitude(std::initializer_list<std::size_t> digits) const;

  double squared_norm() const { return amps_.squaredNorm(); }
  bool is_normalized(double tol = kNormTolerance) const;
  StateVector normalized() const;

  StateVector operator*(Complex scale) const;
  StateVector operator+(const StateVector& other) const;

  /// Adds `amplitude` to the ket with the given digits. Used to build closed
  /// forms term by term.
  void add_term(std::initializer_list<std::size_t> digits, Complex amplitude);

  std::string to_string(double cutoff = 1e-12) const;

 private:
  Dims dims_;
  Eigen::VectorXcd amps_;
};

class Operator {
 public:
  Operator() = default;
  Operator(Dims dims, Eigen::MatrixXcd entries);

  static Operator identity(Dims dims);
  static Operator zero(Dims dims);
  /// |row><col| on a register with the given dims.
  static Operator outer(Dims dims, std::initializer_list<std::size_t> row,
                        std::initializer_list<std::size_t> col);

  const Dims& dims() const { return dims_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  Operator adjoint() const;
  Operator operator*(const Operator& rhs) const;
  Operator operator+(const Operator& rhs) const;
  Operator operator*(Complex scale) const;
  StateVector operator*(const StateVector& state) const;

  /// max |(U^dagger U - I)_ij|
  double unitarity_defect() const;
  bool is_unitary(double tol = kUnitarityTolerance) const;

  /// True iff every column holds exactly one entry equal to 1 and all other
  /// entries are exactly 0, and no two columns map to the same row.
  bool is_permutation() const;

  /// max |A_ij - B_ij|; dims must match.
  double max_abs_difference(const Operator& other) const;

 private:
  Dims dims_;
  Eigen::MatrixXcd entries_;
};

/// Kronecker product; dims are concatenated (a's factors first).
StateVector tensor(const StateVector& a, const StateVector& b);
Operator tensor(const Operator& a, const Operator& b);

/// Applies `op` to the listed subsystems (in that order) and the identity
/// elsewhere. Throws std::invalid_argument on a dims mismatch or a repeated or
/// out-of-range target.
StateVector apply(const Operator& op, const StateVector& state,
                  std::span<const std::size_t> targets);
StateVector apply(const Operator& op, const StateVector& state,
                  std::initializer_list<std::size_t> targets);

/// Born probabilities of each outcome of `subsystem`.
std::vector<double> marginal_probabilities(const StateVector& state, std::size_t subsystem);

struct Measurement {
  std::size_t outcome = 0;
  StateVector collapsed;  // renormalized, same dims as the input
  double probability = 0.0;
};

/// Projects `subsystem` onto `outcome` and renormalizes. Throws
/// std::domain_error if the branch has zero weight.
Measurement project(const StateVector& state, std::size_t subsystem, std::size_t outcome);

/// Samples a computational-basis outcome of `subsystem` from the Born rule.
/// Throws std::domain_error if the marginal is all zero.
Measurement measure(const StateVector& state, std::size_t subsystem, RandomSource& rng);

/// <a|b>
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

/// Number of singular values above `tolerance` for the bipartition
/// `left` | rest. Throws std::invalid_argument for an empty or full split.
std::size_t schmidt_rank(const StateVector& state, std::span<const std::size_t> left,
                         double tolerance = 1e-10);
std::size_t schmidt_rank(const StateVector& state, std::initializer_list<std::size_t> left,
                         double tolerance = 1e-10);

/// Removes the listed subsystems assuming they are in the given basis state;
/// returns the amplitudes of the remaining factor (unnormalized).
StateVector slice(const StateVector& state, std::size_t subsystem, std::size_t value);

}  // namespace cct
