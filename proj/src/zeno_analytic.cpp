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

#include "cct/zeno.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cct {
namespace {

void require_count(std::int64_t value, const char* name) {
  if (value < 1) {
    throw std::invalid_argument(std::string(name) + " must be >= 1, got " + std::to_string(value));
  }
}

// Weights built from amplitude products can overshoot [0, 1] by rounding.
double checked_weight(double w, const char* name) {
  constexpr double slack = 1e-12;
  if (!std::isfinite(w) || w < -slack || w > 1.0 + slack) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(w));
  }
  return std::clamp(w, 0.0, 1.0);
}

double quarter_angle(std::int64_t k, std::int64_t n) {
  return std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
}

}  // namespace

double CycleConfig::theta_m() const { return quarter_angle(1, M); }
double CycleConfig::theta_n() const { return quarter_angle(1, N); }
double CycleConfig::theta_k() const { return quarter_angle(1, K); }

void CycleConfig::validate() const {
  require_count(M, "M");
  require_count(N, "N");
  require_count(K, "K");
}

double sin2_quarter_turn(std::int64_t k, std::int64_t n) {
  require_count(n, "n");
  // sin^2 has period pi in the angle, i.e. 2n in k, and is symmetric about pi/2.
  const std::int64_t period = 2 * n;
  std::int64_t q = ((k % period) + period) % period;
  if (q > n) q = period - q;
  if (q == 0) return 0.0;
  if (q == n) return 1.0;
  if (2 * q == n) return 0.5;
  if (2 * q < n) {
    const double s = std::sin(quarter_angle(q, n));
    return s * s;
  }
  const double c = std::sin(quarter_angle(n - q, n));
  return 1.0 - c * c;
}

double cos2_quarter_turn(std::int64_t k, std::int64_t n) { return sin2_quarter_turn(n - k, n); }

double qz_survival(std::int64_t N) {
  require_count(N, "N");
  return std::pow(cos2_quarter_turn(1, N), static_cast<double>(N));
}

double cqz_lambda0(std::int64_t M) {
  require_count(M, "M");
  return std::pow(cos2_quarter_turn(1, M), static_cast<double>(M));
}

double cqz_lambda1(std::int64_t M, std::int64_t N) { return cqz_success(M, N, 0.0, 1.0, M); }

double cqz_success(std::int64_t M, std::int64_t N, double w_absence, double w_presence,
                   std::int64_t outer_cycles) {
  require_count(M, "M");
  require_count(N, "N");
  require_count(outer_cycles, "outer cycles");
  const double wa = checked_weight(w_absence, "absence weight");
  const double wp = checked_weight(w_presence, "presence weight");
  const double s2m = sin2_quarter_turn(1, M);
  const double s2n = sin2_quarter_turn(1, N);
  const double nd = static_cast<double>(N);

  const double detector = std::pow(1.0 - wa * s2m, static_cast<double>(outer_cycles));
  if (static_cast<double>(outer_cycles) * nd > kLogSpaceThreshold) {
    double log_sum = 0.0;
    for (std::int64_t i = 1; i <= outer_cycles; ++i) {
      const double x = wp * sin2_quarter_turn(i, M) * s2n;
      if (x >= 1.0) return 0.0;
      log_sum += nd * std::log1p(-x);
    }
    return detector * std::exp(log_sum);
  }
  double product = detector;
  for (std::int64_t i = 1; i <= outer_cycles; ++i) {
    product *= std::pow(1.0 - wp * sin2_quarter_turn(i, M) * s2n, nd);
  }
  return product;
}

double cepi_success(std::int64_t N, double nabla0) {
  require_count(N, "N");
  const double w = checked_weight(nabla0, "nabla0");
  return std::pow(1.0 - w * sin2_quarter_turn(1, N), static_cast<double>(N)) * w;
}

double dcepi_success(std::int64_t N, double nabla1) {
  require_count(N, "N");
  const double w = checked_weight(nabla1, "nabla1");
  return std::pow(1.0 - w * sin2_quarter_turn(1, N), static_cast<double>(N)) * w;
}

DcfoProbabilities dcfo_success(std::int64_t K, std::int64_t N, double nabla) {
  require_count(K, "K");
  require_count(N, "N");
  const double w = checked_weight(nabla, "nabla");
  const double s2n = sin2_quarter_turn(1, N);
  const double nd = static_cast<double>(N);
  const double kd = static_cast<double>(K);
  const double inner = 1.0 - w * cos2_quarter_turn(1, K) * s2n;
  const double outer = 1.0 - w * sin2_quarter_turn(1, K);
  DcfoProbabilities p;
  p.per_gate = std::pow(inner, nd) * outer;
  if (kd * nd > kLogSpaceThreshold) {
    if (inner <= 0.0 || outer <= 0.0) {
      p.total = 0.0;
    } else {
      p.total = std::exp(kd * nd * std::log(inner) + kd * std::log(outer));
    }
  } else {
    p.total = std::pow(p.per_gate, kd);
  }
  return p;
}

DcfoProbabilities ddcfo_success(std::int64_t K, std::int64_t N, double nabla4) {
  return dcfo_success(K, N, nabla4);
}

double qz_success_coherent(std::int64_t N, double w_presence) {
  return checked_weight(w_presence, "presence weight") * qz_survival(N);
}

StageProbabilities stage_probabilities_general(const CycleConfig& cfg, const GeneralInput& input) {
  cfg.validate();
  input.validate();
  const double a2 = std::norm(input.alpha);
  const double b2 = std::norm(input.beta);
  const double g2 = std::norm(input.gamma);
  const double d2 = std::norm(input.delta);
  const double sh = std::sin(input.angles.theta / 2.0);
  const double ch = std::cos(input.angles.theta / 2.0);
  const double s2h = sh * sh;
  const double c2h = ch * ch;

  StageProbabilities p;
  p.lambda[0] = cqz_lambda0(cfg.M);
  p.lambda[1] = cqz_lambda1(cfg.M, cfg.N);
  p.nabla[0] = a2;
  p.nabla[1] = a2 * g2 + b2 * d2;

  p.lambda[2] = cqz_success(cfg.M, cfg.N, a2 * d2, b2 * d2, cfg.M);

  p.nabla[4] = d2 * s2h;
  const DcfoProbabilities dd = ddcfo_success(cfg.K, cfg.N, p.nabla[4]);
  p.nabla[5] = dd.per_gate;
  p.nabla[6] = dd.total;
  p.lambda[3] = dd.total;

  p.nabla[7] = d2 * a2 * c2h + d2 * b2 * s2h;
  p.nabla[8] = d2 * b2 * c2h + d2 * a2 * s2h;
  p.lambda[4] = cqz_success(cfg.M, cfg.N, p.nabla[7], p.nabla[8], cfg.M);

  p.lambda[5] = cqz_success(cfg.M, cfg.N, a2 * g2, b2 * g2, 2 * cfg.M);

  const double common = p.lambda[2] * p.lambda[3] * p.lambda[4];
  p.zeta_m = {1.0 - common, 1.0 - common * p.lambda[5]};
  p.zeta = 1.0 - p.lambda[6] * p.lambda[7];
  return p;
}

StageProbabilities stage_probabilities_bell(const CycleConfig& cfg, const BellInput& input) {
  cfg.validate();
  input.validate();
  const double sh = std::sin(input.angles.theta / 2.0);
  const double ch = std::cos(input.angles.theta / 2.0);

  StageProbabilities p;
  p.lambda[0] = cqz_lambda0(cfg.M);
  p.lambda[1] = cqz_lambda1(cfg.M, cfg.N);
  p.nabla_bell = (input.ell == 0) ? std::norm(input.c1) : std::norm(input.c0);
  p.nabla[9] = p.nabla_bell * ch * ch;
  p.nabla[10] = p.nabla_bell * sh * sh;

  const DcfoProbabilities d = dcfo_success(cfg.K, cfg.N, p.nabla[10]);
  p.nabla[2] = d.per_gate;
  p.nabla[3] = d.total;
  p.lambda[6] = d.total;

  p.lambda[7] = (input.ell == 1) ? cqz_success(cfg.M, cfg.N, p.nabla[9], p.nabla[10], cfg.M)
                                 : cqz_success(cfg.M, cfg.N, p.nabla[10], p.nabla[9], cfg.M);

  const double common = p.lambda[2] * p.lambda[3] * p.lambda[4];
  p.zeta_m = {1.0 - common, 1.0 - common * p.lambda[5]};
  p.zeta = 1.0 - p.lambda[6] * p.lambda[7];
  return p;
}

}  // namespace cct
