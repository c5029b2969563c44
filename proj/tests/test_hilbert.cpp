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

#include "cct/gates.hpp"
#include "test_util.hpp"

namespace cct {
namespace {

using testing::kR;
using testing::states_near;

// Full-register matrix of `op` on `targets`, built entry by entry from digit
// predicates; independent of the offset kernel inside apply().
Eigen::MatrixXcd naive_embedding(const Operator& op, const Dims& dims, const std::vector<std::size_t>& targets) {
  const std::size_t n = total_dimension(dims);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      const auto r = digits_of(dims, row);
      const auto c = digits_of(dims, col);
      bool spectators_equal = true;
      for (std::size_t s = 0; s < dims.size(); ++s) {
        if (std::find(targets.begin(), targets.end(), s) == targets.end() && r[s] != c[s]) {
          spectators_equal = false;
        }
      }
      if (!spectators_equal) continue;
      std::vector<std::size_t> rt, ct;
      for (std::size_t t : targets) {
        rt.push_back(r[t]);
        ct.push_back(c[t]);
      }
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          op(index_of(op.dims(), rt), index_of(op.dims(), ct));
    }
  }
  return m;
}

StateVector random_state(const Dims& dims, RandomSource& rng) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(total_dimension(dims)));
  for (auto& a : v) a = Complex{uniform01(rng) - 0.5, uniform01(rng) - 0.5};
  return StateVector(dims, v).normalized();
}

TEST(Index, BigEndianMixedRadix) {
  const Dims d{2, 2, 3};
  EXPECT_EQ(index_of(d, {0, 1, 1}), 4u);
  EXPECT_EQ(index_of(d, {1, 0, 2}), 8u);
  EXPECT_EQ(basis_label(d, 4), "|011>");
  for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(index_of(d, digits_of(d, i)), i);
  EXPECT_THROW(index_of(d, {0, 0, 3}), std::out_of_range);
}

TEST(Tensor, BasisAndIdentity) {
  const StateVector s = tensor(StateVector::basis({2}, {0}), StateVector::basis({2}, {0}));
  EXPECT_EQ(s.dims(), (Dims{2, 2}));
  EXPECT_EQ(s[0], Complex(1.0));
  EXPECT_TRUE(testing::operators_near(tensor(identity(2), identity(3)), Operator::identity({2, 3}), 0.0));
}

TEST(Tensor, HandExpandedKronecker) {
  // (0.6|0> + 0.8|1>) (x) (|00> + |11>)/sqrt2 on dims {2, 2, 3}.
  const StateVector a({2}, {0.6, 0.8});
  StateVector bc = StateVector::zero({2, 3});
  bc.add_term({0, 0}, kR);
  bc.add_term({1, 1}, kR);
  const StateVector s = tensor(a, bc);
  Eigen::VectorXcd want = Eigen::VectorXcd::Zero(12);
  want[0] = 0.6 * kR;
  want[4] = 0.6 * kR;
  want[6] = 0.8 * kR;
  want[10] = 0.8 * kR;
  EXPECT_TRUE(states_near(s, StateVector({2, 2, 3}, want), 1e-15));
}

TEST(Tensor, Associative) {
  // Dyadic amplitudes multiply exactly, so both groupings must agree exactly
  // (signed zeros aside).
  const StateVector a({2}, {0.5, Complex(0, -0.75)});
  const StateVector b({3}, {0.25, -1.0, Complex(0.5, 0.125)});
  const StateVector c({2}, {-0.375, 2.0});
  const StateVector l = tensor(tensor(a, b), c);
  const StateVector r = tensor(a, tensor(b, c));
  ASSERT_EQ(l.dims(), r.dims());
  for (std::size_t i = 0; i < l.size(); ++i) EXPECT_EQ(l[i], r[i]) << basis_label(l.dims(), i);

  RandomSource rng(3);
  const StateVector x = random_state({2}, rng), y = random_state({3}, rng), z = random_state({2}, rng);
  EXPECT_TRUE(states_near(tensor(tensor(x, y), z), tensor(x, tensor(y, z)), 1e-15));
}

TEST(Apply, TruthTables) {
  EXPECT_TRUE(states_near(apply(pauli_x(), StateVector::basis({2}, {0}), {0}), StateVector::basis({2}, {1})));
  const StateVector psi_a({2}, {0.6, 0.8});
  const StateVector in = tensor(tensor(psi_a, StateVector::basis({2}, {1})), StateVector::basis({2}, {0}));
  const StateVector want = tensor(tensor(psi_a, StateVector::basis({2}, {1})), StateVector::basis({2}, {1}));
  EXPECT_TRUE(states_near(apply(cnot_to_ancilla(2), in, {1, 2}), want));
  EXPECT_TRUE(states_near(apply(toffoli(), StateVector::basis({2, 2, 3}, {1, 1, 1}), {0, 1, 2}),
                          StateVector::basis({2, 2, 3}, {1, 0, 1})));
}

TEST(Apply, MatchesNaiveEmbedding) {
  RandomSource rng(11);
  const Dims dims{2, 3, 2};
  const Operator u = controlled_unitary(euler_unitary({0.3, 1.1, -0.7}));  // dims {2, 2}
  for (const auto& targets : std::vector<std::vector<std::size_t>>{{0, 2}, {2, 0}}) {
    const StateVector s = random_state(dims, rng);
    const Eigen::VectorXcd want = naive_embedding(u, dims, targets) * s.amplitudes();
    EXPECT_TRUE(states_near(apply(u, s, targets), StateVector(dims, want), 1e-14));
  }
  const Operator w = v1({0.2, 0.9, 1.4});  // dims {2, 3}
  const StateVector s = random_state(dims, rng);
  const Eigen::VectorXcd want = naive_embedding(w, dims, {2, 1}) * s.amplitudes();
  EXPECT_TRUE(states_near(apply(w, s, {2, 1}), StateVector(dims, want), 1e-14));
}

TEST(Apply, Errors) {
  const StateVector s = StateVector::basis({2, 3}, {0, 0});
  EXPECT_THROW(apply(pauli_x(), s, {1}), std::invalid_argument);           // dims mismatch
  EXPECT_THROW(apply(controlled_z(), s, {0, 0}), std::invalid_argument);   // repeated
  EXPECT_THROW(apply(pauli_x(), s, {5}), std::invalid_argument);           // out of range
}

TEST(Apply, UnitaryPreservesNorm) {
  RandomSource rng(5);
  for (int i = 0; i < 50; ++i) {
    const StateVector s = random_state({2, 2, 3}, rng);
    const EulerAngles a{uniform01(rng) * 6, uniform01(rng) * 6, uniform01(rng) * 6};
    const StateVector out = apply(v1(a), s, {1, 2});
    EXPECT_NEAR(out.squared_norm(), 1.0, 1e-12);
  }
}

TEST(Measure, BornFrequencies) {
  const StateVector plus({2}, {kR, kR});
  RandomSource rng(99);
  const int n = 100000;
  int zeros = 0;
  for (int i = 0; i < n; ++i) {
    const Measurement m = measure(plus, 0, rng);
    EXPECT_NEAR(m.probability, 0.5, 1e-15);
    zeros += m.outcome == 0 ? 1 : 0;
  }
  EXPECT_NEAR(zeros / double(n), 0.5, testing::four_sigma(0.5, n));
}

TEST(Measure, DeterministicAndErrors) {
  RandomSource rng(1);
  const Measurement m = measure(StateVector::basis({3}, {2}), 0, rng);
  EXPECT_EQ(m.outcome, 2u);
  EXPECT_DOUBLE_EQ(m.probability, 1.0);
  EXPECT_THROW(measure(StateVector::zero({3}), 0, rng), std::domain_error);
  EXPECT_THROW(project(StateVector::basis({2}, {0}), 0, 1), std::domain_error);
}

TEST(Measure, ProjectRenormalizes) {
  StateVector s = StateVector::zero({2, 2});
  s.add_term({0, 0}, 0.6);
  s.add_term({1, 1}, 0.8);
  const Measurement m = project(s, 1, 1);
  EXPECT_NEAR(m.probability, 0.64, 1e-15);
  EXPECT_TRUE(states_near(m.collapsed, StateVector::basis({2, 2}, {1, 1})));
  EXPECT_TRUE(states_near(slice(m.collapsed, 1, 1), StateVector::basis({2}, {1})));
}

TEST(Fidelity, Basics) {
  RandomSource rng(8);
  const StateVector a = random_state({2, 3}, rng), b = random_state({2, 3}, rng);
  EXPECT_NEAR(fidelity(a, a), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(a, a * std::polar(1.0, 3.14159 / 7)), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-15);
  EXPECT_EQ(fidelity(StateVector::basis({2}, {0}), StateVector::basis({2}, {1})), 0.0);
  EXPECT_THROW(fidelity(a, StateVector::basis({2}, {0})), std::invalid_argument);
}

TEST(SchmidtRank, ProductAndBell) {
  EXPECT_EQ(schmidt_rank(StateVector::basis({2, 2}, {0, 0}), {0}), 1u);
  EXPECT_EQ(schmidt_rank(StateVector({2, 2}, {kR, 0, 0, kR}), {0}), 2u);
  EXPECT_THROW(schmidt_rank(StateVector({2, 2}, {kR, 0, 0, kR}), {}), std::invalid_argument);
  EXPECT_THROW(schmidt_rank(StateVector({2, 2}, {kR, 0, 0, kR}), {0, 1}), std::invalid_argument);
}

}  // namespace
}  // namespace cct
