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

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "cct/zeno.hpp"
#include "test_util.hpp"

namespace cct {
namespace {

using Q = boost::rational<std::int64_t>;
using std::numbers::pi;
using testing::kR;

double to_double(Q q) { return boost::rational_cast<double>(q); }

Q qpow(Q base, int n) {
  Q r = 1;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

// Straight product with the textbook angle, no reduction tricks and no log space.
double naive_cqz(std::int64_t M, std::int64_t N, double wa, double wp, std::int64_t outer) {
  const double tm = pi / (2.0 * M), tn = pi / (2.0 * N);
  double p = std::pow(1.0 - wa * std::sin(tm) * std::sin(tm), static_cast<double>(outer));
  for (std::int64_t i = 1; i <= outer; ++i) {
    const double s = std::sin(i * tm);
    p *= std::pow(1.0 - wp * s * s * std::sin(tn) * std::sin(tn), static_cast<double>(N));
  }
  return p;
}

double naive_dcfo(std::int64_t K, std::int64_t N, double w) {
  const double tk = pi / (2.0 * K), tn = pi / (2.0 * N);
  const double per = std::pow(1.0 - w * std::cos(tk) * std::cos(tk) * std::sin(tn) * std::sin(tn), N) *
                     (1.0 - w * std::sin(tk) * std::sin(tk));
  return std::pow(per, K);
}

TEST(ZenoPins, RationalOracle) {
  const Q half(1, 2);  // sin^2(pi/4) = cos^2(pi/4)
  EXPECT_EQ(qz_survival(1), 0.0);
  EXPECT_EQ(qz_survival(2), to_double(qpow(half, 2)));
  EXPECT_EQ(cqz_lambda0(1), 0.0);
  EXPECT_EQ(cqz_lambda0(2), to_double(qpow(half, 2)));
  // i = 1: sin^2(pi/4) = 1/2; i = 2: sin^2(pi/2) = 1.
  const Q l1 = qpow(1 - half * half, 2) * qpow(1 - Q(1) * half, 2);
  EXPECT_EQ(l1, Q(9, 64));
  EXPECT_EQ(cqz_lambda1(2, 2), to_double(l1));
  EXPECT_EQ(cqz_lambda1(1, 1), 0.0);
  EXPECT_EQ(cepi_success(2, 0.5), to_double(qpow(1 - half * half, 2) * half));
  EXPECT_EQ(cepi_success(2, 0.5), 0.28125);

  const Q per_gate = qpow(1 - half * half, 2) * (1 - half);
  EXPECT_EQ(qpow(per_gate, 2), Q(81, 1024));
  EXPECT_EQ(ddcfo_success(2, 2, 1.0).total, to_double(qpow(per_gate, 2)));
  EXPECT_EQ(ddcfo_success(2, 2, 1.0).per_gate, to_double(per_gate));
}

TEST(ZenoPins, TrivialExamples) {
  EXPECT_EQ(cepi_success(7, 0.0), 0.0);
  EXPECT_EQ(dcepi_success(7, 0.0), 0.0);
  for (std::int64_t n : {1, 2, 3, 10, 77}) {
    EXPECT_EQ(cepi_success(n, 1.0), qz_survival(n));
    EXPECT_EQ(dcepi_success(n, 1.0), qz_survival(n));
  }
  EXPECT_EQ(dcfo_success(9, 4, 0.0).total, 1.0);
  EXPECT_EQ(ddcfo_success(9, 4, 0.0).total, 1.0);
  for (double w : {0.1, 0.5, 0.9}) EXPECT_NEAR(dcfo_success(1, 6, w).total, 1.0 - w, 1e-15);
  EXPECT_THROW(qz_survival(0), std::invalid_argument);
  EXPECT_THROW(cepi_success(3, 1.5), std::invalid_argument);
}

TEST(ZenoScans, MonotoneExamples) {
  for (std::int64_t n = 2; n < 200; ++n) EXPECT_LE(qz_survival(n), qz_survival(n + 1));
  EXPECT_GT(qz_survival(200), 0.97);
  EXPECT_GT(cqz_lambda0(1000), 0.997);
  EXPECT_GT(cqz_lambda1(25, 25), cqz_lambda1(10, 10));
  double prev = 0.0;
  for (std::int64_t c : {2, 5, 10, 20, 40, 80, 160}) {
    EXPECT_GT(cqz_lambda1(c, c), prev);
    prev = cqz_lambda1(c, c);
  }
}

TEST(ZenoScans, MatchesNaiveProducts) {
  for (auto [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 2}, {10, 25}, {25, 25}, {200, 200}, {1000, 1000}}) {
    for (auto [wa, wp] : std::vector<std::pair<double, double>>{{0, 1}, {0.3, 0.7}, {0.5, 0.5}}) {
      const double want = naive_cqz(m, n, wa, wp, m);
      EXPECT_NEAR(cqz_success(m, n, wa, wp, m), want, 1e-12 + 1e-10 * want) << m << " " << n;
    }
    const double want2 = naive_cqz(m, n, 0.2, 0.3, 2 * m);
    EXPECT_NEAR(cqz_success(m, n, 0.2, 0.3, 2 * m), want2, 1e-12 + 1e-10 * want2);
  }
  for (auto [k, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 4}, {25, 25}, {300, 300}}) {
    for (double w : {0.1, 0.5, 1.0}) {
      const double want = naive_dcfo(k, n, w);
      EXPECT_NEAR(dcfo_success(k, n, w).total, want, 1e-12 + 1e-10 * want);
    }
  }
  EXPECT_NEAR(cqz_lambda1(25, 25), naive_cqz(25, 25, 0, 1, 25), 1e-14);
}

GeneralInput balanced(double theta) {
  GeneralInput in;
  in.alpha = in.beta = in.gamma = in.delta = kR;
  in.angles = {0.0, theta, 0.0};
  return in;
}

TEST(StageGeneral, DeltaZero) {
  GeneralInput in = balanced(pi / 2);
  in.gamma = 1.0;
  in.delta = 0.0;
  const StageProbabilities p = stage_probabilities_general({30, 20, 10}, in);
  EXPECT_EQ(p.lambda[2], 1.0);
  EXPECT_EQ(p.lambda[3], 1.0);
  EXPECT_EQ(p.lambda[4], 1.0);
  EXPECT_EQ(p.zeta_m[0], 0.0);
}

TEST(StageGeneral, WeightsAndOrdering) {
  const GeneralInput in = balanced(pi / 2);
  const StageProbabilities p = stage_probabilities_general({25, 25, 25}, in);
  EXPECT_NEAR(p.nabla[4], 0.5 * 0.5, 1e-15);
  EXPECT_NEAR(p.nabla[7] + p.nabla[8], 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(p.lambda[2], cqz_success(25, 25, 0.25, 0.25, 25));
  EXPECT_DOUBLE_EQ(p.lambda[5], cqz_success(25, 25, 0.25, 0.25, 50));
  EXPECT_DOUBLE_EQ(p.zeta_m[1], 1.0 - p.lambda[2] * p.lambda[3] * p.lambda[4] * p.lambda[5]);
  EXPECT_LE(p.zeta_m[0], p.zeta_m[1]);
  const StageProbabilities q = stage_probabilities_general({50, 50, 50}, in);
  EXPECT_LT(q.zeta_m[0], p.zeta_m[0]);
}

TEST(StageGeneral, DiagonalZetaStrictlyDecreasing) {
  const GeneralInput in = balanced(pi / 2);
  double prev0 = 2.0, prev1 = 2.0;
  for (std::int64_t c : {5, 10, 20, 40, 80}) {
    const StageProbabilities p = stage_probabilities_general({c, c, c}, in);
    EXPECT_LT(p.zeta_m[0], prev0);
    EXPECT_LT(p.zeta_m[1], prev1);
    prev0 = p.zeta_m[0];
    prev1 = p.zeta_m[1];
  }
}

BellInput bell(int ell, Complex c0, Complex c1, double theta) {
  BellInput in;
  in.ell = ell;
  in.c0 = c0;
  in.c1 = c1;
  in.angles = {0.0, theta, 0.0};
  return in;
}

TEST(StageBell, Examples) {
  EXPECT_EQ(stage_probabilities_bell({25, 25, 25}, bell(0, kR, kR, 0.0)).lambda[6], 1.0);
  for (int ell : {0, 1}) {
    const BellInput in = ell == 0 ? bell(0, 1.0, 0.0, 1.3) : bell(1, 0.0, 1.0, 1.3);
    const StageProbabilities p = stage_probabilities_bell({25, 25, 25}, in);
    EXPECT_EQ(p.lambda[6], 1.0);
    EXPECT_EQ(p.lambda[7], 1.0);
    EXPECT_EQ(p.zeta, 0.0);
  }
  const StageProbabilities p = stage_probabilities_bell({20, 15, 10}, bell(1, 0.6, 0.8, pi));
  EXPECT_NEAR(p.nabla[9], 0.0, 1e-15);
  EXPECT_NEAR(p.nabla[10], 0.36, 1e-15);
  EXPECT_DOUBLE_EQ(p.lambda[7], cqz_success(20, 15, 0.0, p.nabla[10], 20));
  EXPECT_DOUBLE_EQ(p.zeta, 1.0 - p.lambda[6] * p.lambda[7]);
}

TEST(StageBell, ZetaStrictlyDecreasingOnDiagonal) {
  double prev = 2.0;
  for (std::int64_t c : {5, 10, 20, 40, 80}) {
    const double z = stage_probabilities_bell({c, c, c}, bell(0, kR, kR, pi / 2)).zeta;
    EXPECT_LT(z, prev);
    prev = z;
  }
}

TEST(ZenoProperties, UnitIntervalGrid) {
  RandomSource rng(2024);
  for (int i = 0; i < 300; ++i) {
    const CycleConfig cfg{1 + static_cast<std::int64_t>(uniform01(rng) * 120),
                          1 + static_cast<std::int64_t>(uniform01(rng) * 120),
                          1 + static_cast<std::int64_t>(uniform01(rng) * 120)};
    const StageProbabilities g = stage_probabilities_general(cfg, random_general_input(rng));
    const StageProbabilities b = stage_probabilities_bell(cfg, random_bell_input(rng, i % 2, 1));
    for (const StageProbabilities* p : {&g, &b}) {
      for (double v : p->lambda) EXPECT_TRUE(v >= 0.0 && v <= 1.0) << v;
      for (double v : p->nabla) EXPECT_TRUE(v >= 0.0 && v <= 1.0) << v;
      for (double v : p->zeta_m) EXPECT_TRUE(v >= 0.0 && v <= 1.0) << v;
      EXPECT_TRUE(p->zeta >= 0.0 && p->zeta <= 1.0);
    }
    EXPECT_LE(g.zeta_m[0], g.zeta_m[1]);
    const double w = uniform01(rng);
    EXPECT_EQ(ddcfo_success(cfg.K, cfg.N, w).total, dcfo_success(cfg.K, cfg.N, w).total);
  }
}

TEST(ZenoProperties, SinSquaredReduction) {
  for (std::int64_t n : {1, 2, 3, 7, 25, 1000}) {
    for (std::int64_t k = -3 * n; k <= 3 * n; ++k) {
      const double s = std::sin(k * pi / (2.0 * n));
      EXPECT_NEAR(sin2_quarter_turn(k, n), s * s, 1e-15);
      EXPECT_NEAR(sin2_quarter_turn(k, n) + cos2_quarter_turn(k, n), 1.0, 1e-15);
    }
  }
}

}  // namespace
}  // namespace cct
