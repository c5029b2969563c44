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

#include "cct/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cct {
namespace {

std::string dims_string(const Dims& dims) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ']';
  return os.str();
}

void require_same_dims(const Dims& a, const Dims& b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dims mismatch " + dims_string(a) +
                                " vs " + dims_string(b));
  }
}

// Strides of a big-endian mixed-radix register.
std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

}  // namespace

std::size_t total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<std::size_t> digits_of(const Dims& dims, std::size_t index) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = index % dims[i];
    index /= dims[i];
  }
  return digits;
}

std::size_t index_of(const Dims& dims, std::span<const std::size_t> digits) {
  if (digits.size() != dims.size()) throw std::invalid_argument("index_of: digit count mismatch");
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (digits[i] >= dims[i]) throw std::out_of_range("index_of: digit out of range");
    index = index * dims[i] + digits[i];
  }
  return index;
}

std::size_t index_of(const Dims& dims, std::initializer_list<std::size_t> digits) {
  return index_of(dims, std::span<const std::size_t>(digits.begin(), digits.size()));
}

std::string basis_label(const Dims& dims, std::size_t index) {
  const auto digits = digits_of(dims, index);
  const bool compact = std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d <= 10; });
  std::ostringstream os;
  os << '|';
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!compact && i) os << ' ';
    os << digits[i];
  }
  os << '>';
  return os.str();
}

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(Dims dims, Eigen::VectorXcd amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  if (dims_.empty() || std::any_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; })) {
    throw std::invalid_argument("StateVector: dims must be a nonempty list of positive integers");
  }
  if (static_cast<std::size_t>(amps_.size()) != total_dimension(dims_)) {
    throw std::invalid_argument("StateVector: amplitude count does not match dims " +
                                dims_string(dims_));
  }
}

StateVector::StateVector(Dims dims, std::initializer_list<Complex> amplitudes)
    : StateVector(std::move(dims),
                  Eigen::Map<const Eigen::VectorXcd>(amplitudes.begin(),
                                                     static_cast<Eigen::Index>(amplitudes.size()))) {}

StateVector StateVector::zero(Dims dims) {
  const auto n = static_cast<Eigen::Index>(total_dimension(dims));
  return StateVector(std::move(dims), Eigen::VectorXcd::Zero(n));
}

StateVector StateVector::basis(Dims dims, std::initializer_list<std::size_t> digits) {
  const std::size_t index = index_of(dims, digits);
  return basis_index(std::move(dims), index);
}

StateVector StateVector::basis_index(Dims dims, std::size_t index) {
  StateVector s = zero(std::move(dims));
  if (index >= s.size()) throw std::out_of_range("StateVector::basis_index");
  s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

Complex StateVector::amplitude(std::initializer_list<std::size_t> digits) const {
  return amps_[static_cast<Eigen::Index>(index_of(dims_, digits))];
}

bool StateVector::is_normalized(double tol) const { return std::abs(squared_norm() - 1.0) <= tol; }

StateVector StateVector::normalized() const {
  const double n = amps_.norm();
  if (n == 0.0) throw std::domain_error("StateVector::normalized: zero vector");
  return StateVector(dims_, amps_ / n);
}

StateVector StateVector::operator*(Complex scale) const { return StateVector(dims_, amps_ * scale); }

StateVector StateVector::operator+(const StateVector& other) const {
  require_same_dims(dims_, other.dims_, "StateVector::operator+");
  return StateVector(dims_, amps_ + other.amps_);
}

void StateVector::add_term(std::initializer_list<std::size_t> digits, Complex amplitude) {
  amps_[static_cast<Eigen::Index>(index_of(dims_, digits))] += amplitude;
}

std::string StateVector::to_string(double cutoff) const {
  std::ostringstream os;
  os << std::setprecision(6);
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    const Complex a = (*this)[i];
    if (std::abs(a) <= cutoff) continue;
    if (!first) os << " + ";
    os << '(' << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i)"
       << basis_label(dims_, i);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

// ------------------------------------------------------------------- Operator

Operator::Operator(Dims dims, Eigen::MatrixXcd entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(total_dimension(dims_));
  if (entries_.rows() != n || entries_.cols() != n) {
    throw std::invalid_argument("Operator: matrix shape does not match dims " + dims_string(dims_));
  }
}

Operator Operator::identity(Dims dims) {
  const auto n = static_cast<Eigen::Index>(total_dimension(dims));
  return Operator(std::move(dims), Eigen::MatrixXcd::Identity(n, n));
}

Operator Operator::zero(Dims dims) {
  const auto n = static_cast<Eigen::Index>(total_dimension(dims));
  return Operator(std::move(dims), Eigen::MatrixXcd::Zero(n, n));
}

Operator Operator::outer(Dims dims, std::initializer_list<std::size_t> row,
                         std::initializer_list<std::size_t> col) {
  Operator op = zero(dims);
  op.entries_(static_cast<Eigen::Index>(index_of(dims, row)),
              static_cast<Eigen::Index>(index_of(dims, col))) = 1.0;
  return op;
}

Operator Operator::adjoint() const { return Operator(dims_, entries_.adjoint()); }

Operator Operator::operator*(const Operator& rhs) const {
  require_same_dims(dims_, rhs.dims_, "Operator::operator*");
  return Operator(dims_, entries_ * rhs.entries_);
}

Operator Operator::operator+(const Operator& rhs) const {
  require_same_dims(dims_, rhs.dims_, "Operator::operator+");
  return Operator(dims_, entries_ + rhs.entries_);
}

Operator Operator::operator*(Complex scale) const { return Operator(dims_, entries_ * scale); }

StateVector Operator::operator*(const StateVector& state) const {
  require_same_dims(dims_, state.dims(), "Operator * StateVector");
  return StateVector(dims_, entries_ * state.amplitudes());
}

double Operator::unitarity_defect() const {
  const auto n = entries_.rows();
  return (entries_.adjoint() * entries_ - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

bool Operator::is_unitary(double tol) const { return unitarity_defect() < tol; }

bool Operator::is_permutation() const {
  const auto n = entries_.rows();
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index target = -1;
    for (Eigen::Index r = 0; r < n; ++r) {
      const Complex v = entries_(r, c);
      if (v == Complex(1.0, 0.0)) {
        if (target >= 0) return false;
        target = r;
      } else if (v != Complex(0.0, 0.0)) {
        return false;
      }
    }
    if (target < 0 || hit[static_cast<std::size_t>(target)]) return false;
    hit[static_cast<std::size_t>(target)] = true;
  }
  return true;
}

double Operator::max_abs_difference(const Operator& other) const {
  require_same_dims(dims_, other.dims_, "Operator::max_abs_difference");
  return (entries_ - other.entries_).cwiseAbs().maxCoeff();
}

// ----------------------------------------------------------- free functions

StateVector tensor(const StateVector& a, const StateVector& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  const auto nb = static_cast<Eigen::Index>(b.size());
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(a.size()) * nb);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.size()); ++i) {
    amps.segment(i * nb, nb) = a.amplitudes()[i] * b.amplitudes();
  }
  return StateVector(std::move(dims), std::move(amps));
}

Operator tensor(const Operator& a, const Operator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  const auto na = static_cast<Eigen::Index>(a.size());
  const auto nb = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXcd m(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      m.block(i * nb, j * nb, nb, nb) = a.entries()(i, j) * b.entries();
    }
  }
  return Operator(std::move(dims), std::move(m));
}

StateVector apply(const Operator& op, const StateVector& state,
                  std::span<const std::size_t> targets) {
  const Dims& dims = state.dims();
  if (targets.size() != op.dims().size()) {
    throw std::invalid_argument("apply: operator acts on " + std::to_string(op.dims().size()) +
                                " subsystems but " + std::to_string(targets.size()) +
                                " targets were given");
  }
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const std::size_t t = targets[k];
    if (t >= dims.size()) throw std::invalid_argument("apply: target index out of range");
    if (seen[t]) throw std::invalid_argument("apply: repeated target index");
    seen[t] = true;
    if (dims[t] != op.dims()[k]) {
      throw std::invalid_argument("apply: operator dims " + dims_string(op.dims()) +
                                  " do not match targeted subsystem dims");
    }
  }

  const auto strides = strides_of(dims);
  const std::size_t op_dim = op.size();

  // offset[s] = displacement in the full register of operator basis index s.
  std::vector<std::size_t> offset(op_dim, 0);
  for (std::size_t s = 0; s < op_dim; ++s) {
    const auto sub = digits_of(op.dims(), s);
    for (std::size_t k = 0; k < targets.size(); ++k) offset[s] += sub[k] * strides[targets[k]];
  }

  const Eigen::VectorXcd& in = state.amplitudes();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    std::size_t row = 0;
    std::size_t base = i;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const std::size_t d = (i / strides[targets[k]]) % dims[targets[k]];
      row = row * op.dims()[k] + d;
      base -= d * strides[targets[k]];
    }
    Complex acc = 0.0;
    for (std::size_t s = 0; s < op_dim; ++s) {
      acc += op(row, s) * in[static_cast<Eigen::Index>(base + offset[s])];
    }
    out[static_cast<Eigen::Index>(i)] = acc;
  }
  return StateVector(dims, std::move(out));
}

StateVector apply(const Operator& op, const StateVector& state,
                  std::initializer_list<std::size_t> targets) {
  return apply(op, state, std::span<const std::size_t>(targets.begin(), targets.size()));
}

std::vector<double> marginal_probabilities(const StateVector& state, std::size_t subsystem) {
  const Dims& dims = state.dims();
  if (subsystem >= dims.size()) throw std::invalid_argument("marginal: subsystem out of range");
  const auto strides = strides_of(dims);
  std::vector<double> p(dims[subsystem], 0.0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    p[(i / strides[subsystem]) % dims[subsystem]] += std::norm(state[i]);
  }
  return p;
}

Measurement project(const StateVector& state, std::size_t subsystem, std::size_t outcome) {
  const Dims& dims = state.dims();
  if (subsystem >= dims.size() || outcome >= dims[subsystem]) {
    throw std::invalid_argument("project: subsystem or outcome out of range");
  }
  const auto strides = strides_of(dims);
  Eigen::VectorXcd amps = state.amplitudes();
  double weight = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if ((i / strides[subsystem]) % dims[subsystem] == outcome) {
      weight += std::norm(amps[static_cast<Eigen::Index>(i)]);
    } else {
      amps[static_cast<Eigen::Index>(i)] = 0.0;
    }
  }
  if (weight == 0.0) throw std::domain_error("project: outcome has zero weight");
  amps /= std::sqrt(weight);
  return Measurement{outcome, StateVector(dims, std::move(amps)), weight};
}

Measurement measure(const StateVector& state, std::size_t subsystem, RandomSource& rng) {
  const auto p = marginal_probabilities(state, subsystem);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (total == 0.0) {
    throw std::domain_error("measure: all-zero marginal (unnormalized state upstream)");
  }
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  std::size_t outcome = p.size() - 1;
  for (std::size_t k = 0; k < p.size(); ++k) {
    acc += p[k];
    if (u < acc) {
      outcome = k;
      break;
    }
  }
  // Rounding can leave u >= acc on the last step; never return a zero-weight outcome.
  while (p[outcome] == 0.0 && outcome > 0) --outcome;
  Measurement m = project(state, subsystem, outcome);
  m.probability = p[outcome] / total;
  return m;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_dims(a.dims(), b.dims(), "inner_product");
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the left operand
}

double fidelity(const StateVector& a, const StateVector& b) {
  require_same_dims(a.dims(), b.dims(), "fidelity");
  return std::norm(inner_product(a, b));
}

std::size_t schmidt_rank(const StateVector& state, std::span<const std::size_t> left,
                         double tolerance) {
  const Dims& dims = state.dims();
  std::vector<bool> is_left(dims.size(), false);
  for (std::size_t s : left) {
    if (s >= dims.size()) throw std::invalid_argument("schmidt_rank: subsystem out of range");
    is_left[s] = true;
  }
  const auto n_left = static_cast<std::size_t>(std::count(is_left.begin(), is_left.end(), true));
  if (n_left == 0 || n_left == dims.size()) {
    throw std::invalid_argument("schmidt_rank: bipartition must be nonempty on both sides");
  }
  Dims left_dims, right_dims;
  for (std::size_t s = 0; s < dims.size(); ++s) (is_left[s] ? left_dims : right_dims).push_back(dims[s]);

  Eigen::MatrixXcd m(static_cast<Eigen::Index>(total_dimension(left_dims)),
                     static_cast<Eigen::Index>(total_dimension(right_dims)));
  std::vector<std::size_t> ld, rd;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const auto d = digits_of(dims, i);
    ld.clear();
    rd.clear();
    for (std::size_t s = 0; s < dims.size(); ++s) (is_left[s] ? ld : rd).push_back(d[s]);
    m(static_cast<Eigen::Index>(index_of(left_dims, ld)),
      static_cast<Eigen::Index>(index_of(right_dims, rd))) = state[i];
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  return static_cast<std::size_t>((sv.array() > tolerance).count());
}

std::size_t schmidt_rank(const StateVector& state, std::initializer_list<std::size_t> left,
                         double tolerance) {
  return schmidt_rank(state, std::span<const std::size_t>(left.begin(), left.size()), tolerance);
}

StateVector slice(const StateVector& state, std::size_t subsystem, std::size_t value) {
  const Dims& dims = state.dims();
  if (subsystem >= dims.size() || value >= dims[subsystem] || dims.size() < 2) {
    throw std::invalid_argument("slice: invalid subsystem or value");
  }
  Dims rest = dims;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(subsystem));
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(total_dimension(rest)));
  Eigen::Index k = 0;
  const auto strides = strides_of(dims);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if ((i / strides[subsystem]) % dims[subsystem] == value) amps[k++] = state[i];
  }
  return StateVector(std::move(rest), std::move(amps));
}

}  // namespace cct
