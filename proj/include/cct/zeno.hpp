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

// Closed-form success probabilities of the counterfactual optical gates and
// of every stage of the telecomputation protocol.
//
// Angles: theta_M = pi/(2M), theta_N = pi/(2N), theta_K = pi/(2K).
// All sin^2/cos^2 of multiples of these angles go through sin2_quarter_turn,
// which is exact at 0, pi/4 and pi/2 so small-cycle values come out as exact
// dyadic rationals.

#include <array>
#include <cstdint>

#include "cct/protocol.hpp"

namespace cct {

struct CycleConfig {
  std::int64_t M = 25;  // outer cycles
  std::int64_t N = 25;  // inner cycles
  std::int64_t K = 25;  // concatenated CEPI/DCEPI gates

  double theta_m() const;
  double theta_n() const;
  double theta_k() const;

  /// Throws std::invalid_argument naming the field if any count is < 1.
  void validate() const;
};

/// sin^2(k pi / (2n)) for integer k and n >= 1.
double sin2_quarter_turn(std::int64_t k, std::int64_t n);
/// cos^2(k pi / (2n)).
double cos2_quarter_turn(std::int64_t k, std::int64_t n);

/// Products of more than this many factors are accumulated as exp(sum log1p).
inline constexpr double kLogSpaceThreshold = 1e4;

/// cos^(2N) theta_N.
double qz_survival(std::int64_t N);

/// cos^(2M) theta_M.
double cqz_lambda0(std::int64_t M);

/// prod_{i=1..M} [1 - sin^2(i theta_M) sin^2 theta_N]^N.
double cqz_lambda1(std::int64_t M, std::int64_t N);

/// Success probability of a CQZ gate whose absorber is in absence with
/// weight w_absence and in presence with weight w_presence:
///   (1 - w_absence sin^2 theta_M)^outer
///   * prod_{i=1..outer} [1 - w_presence sin^2(i theta_M) sin^2 theta_N]^N.
/// theta_M is always pi/(2M), even when outer != M.
double cqz_success(std::int64_t M, std::int64_t N, double w_absence, double w_presence,
                   std::int64_t outer_cycles);

/// (1 - nabla0 sin^2 theta_N)^N nabla0.
double cepi_success(std::int64_t N, double nabla0);
/// Same form as cepi_success with nabla1 = |alpha gamma|^2 + |beta delta|^2.
double dcepi_success(std::int64_t N, double nabla1);

struct DcfoProbabilities {
  double per_gate = 1.0;  // (1 - w cos^2 theta_K sin^2 theta_N)^N (1 - w sin^2 theta_K)
  double total = 1.0;     // per_gate^K
};

DcfoProbabilities dcfo_success(std::int64_t K, std::int64_t N, double nabla);
DcfoProbabilities ddcfo_success(std::int64_t K, std::int64_t N, double nabla4);

/// Success probability of a QZ gate in front of a superposed absorber when
/// the joint electron-photon state is evolved coherently: w cos^(2N) theta_N.
double qz_success_coherent(std::int64_t N, double w_presence);

/// Index names follow the lambda / nabla numbering of the optical protocol.
/// Stages that do not occur for an input type keep lambda = 1; unused
/// success-type nablas (2, 3, 5, 6) stay 1 and unused weight-type nablas stay 0.
struct StageProbabilities {
  std::array<double, 8> lambda{1, 1, 1, 1, 1, 1, 1, 1};
  std::array<double, 11> nabla{0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0};
  double nabla_bell = 0.0;  // class weight: |beta|^2 (l = 0) or |gamma|^2 (l = 1)
  std::array<double, 2> zeta_m{0, 0};
  double zeta = 0.0;
};

/// lambda0..lambda5, nabla0..nabla8 and zeta_m for a general input.
///   lambda2 = cqz(|alpha delta|^2, |beta delta|^2, M)
///   lambda3 = D-DCFO with nabla4 = |delta|^2 sin^2(theta/2)
///   lambda4 = cqz(nabla7, nabla8, M)
///   lambda5 = cqz(|alpha gamma|^2, |beta gamma|^2, 2M)
///   zeta_m  = 1 - lambda2 lambda3 lambda4 lambda5^m
StageProbabilities stage_probabilities_general(const CycleConfig& cfg, const GeneralInput& input);

/// lambda6, lambda7, nabla2, nabla3, nabla9, nabla10 and zeta for an
/// l-class input.
///   lambda6 = DCFO with weight nabla10 = nabla sin^2(theta/2)
///   lambda7 = cqz(nabla9, nabla10, M) for l = 1, cqz(nabla10, nabla9, M) for l = 0
///   zeta    = 1 - lambda6 lambda7
StageProbabilities stage_probabilities_bell(const CycleConfig& cfg, const BellInput& input);

}  // namespace cct
