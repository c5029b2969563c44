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

#include "cct/zeno_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cct {
namespace {

constexpr std::string_view kStageQz = "qz";
constexpr std::string_view kStageCqzOuter = "cqz-outer";
constexpr std::string_view kStageCqzInner = "cqz-inner";

std::size_t digit(Polarization p) { return static_cast<std::size_t>(p); }

// Amplitudes x[e][r]: e is the electron digit, r the photon polarization
// relative to the input (0 = input, 1 = the other one).
struct Joint {
  Complex x[2][2]{};

  double norm2() const {
    return std::norm(x[0][0]) + std::norm(x[0][1]) + std::norm(x[1][0]) + std::norm(x[1][1]);
  }
  void renormalize() {
    const double n = std::sqrt(norm2());
    if (n == 0.0) return;
    for (auto& row : x) {
      for (auto& a : row) a /= n;
    }
  }
  void rotate(std::size_t e, double c, double s) {
    const Complex g = x[e][0];
    const Complex o = x[e][1];
    x[e][0] = c * g - s * o;
    x[e][1] = s * g + c * o;
  }
  StateVector to_state(Polarization input) const {
    StateVector out = StateVector::zero(kElectronPhotonDims);
    for (std::size_t e = 0; e < 2; ++e) {
      for (std::size_t r = 0; r < 2; ++r) out.add_term({e, r ^ digit(input)}, x[e][r]);
    }
    return out.normalized();
  }
};

Joint initial_joint(const Absorber& a) {
  Joint j;
  j.x[0][0] = a.absence;
  j.x[1][0] = a.presence;
  return j;
}

TrajectoryOutcome absorbed(std::string_view stage, std::int64_t cycle) {
  return {OutcomeKind::AbsorbedByElectron, stage, cycle, std::nullopt, true};
}

TrajectoryOutcome discarded(std::string_view stage, std::int64_t cycle,
                            std::optional<StateVector> state = std::nullopt) {
  return {OutcomeKind::DiscardedAtDetector, stage, cycle, std::move(state), true};
}

TrajectoryOutcome success(StateVector state) {
  return {OutcomeKind::Success, {}, 0, std::move(state), false};
}

void require_count(std::int64_t value, const char* name) {
  if (value < 1) {
    throw std::invalid_argument(std::string(name) + " must be >= 1, got " + std::to_string(value));
  }
}

// 1 - (1 - x)^n without cancellation for small x.
double block_failure(double x, double n) {
  if (x >= 1.0) return 1.0;
  return -std::expm1(n * std::log1p(-x));
}

// ---------------------------------------------------------------- campaigns

struct TrialRecord {
  OutcomeKind kind = OutcomeKind::Success;
  bool violation = false;
  double fidelity = 0.0;
};

// Neumaier-compensated sum, evaluated in trial order.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

MonteCarloReport reduce(const std::vector<TrialRecord>& records, std::uint64_t seed) {
  MonteCarloReport r;
  r.trials = records.size();
  r.seed = seed;
  CompensatedSum fid;
  for (const auto& t : records) {
    switch (t.kind) {
      case OutcomeKind::Success:
        ++r.successes;
        fid.add(t.fidelity);
        if (t.violation) ++r.counterfactual_violations;
        break;
      case OutcomeKind::AbsorbedByElectron:
        ++r.absorbed;
        break;
      case OutcomeKind::DiscardedAtDetector:
        ++r.discarded;
        break;
    }
  }
  const double n = static_cast<double>(r.trials);
  r.abort_rate = 1.0 - static_cast<double>(r.successes) / n;
  r.standard_error = std::sqrt(r.abort_rate * (1.0 - r.abort_rate) / n);
  if (r.successes > 0) r.conditional_fidelity = fid.value() / static_cast<double>(r.successes);
  return r;
}

TrialRecord record_of(const TrajectoryOutcome& o, const StateVector& ideal) {
  TrialRecord t;
  t.kind = o.kind;
  t.violation = o.kind == OutcomeKind::Success && o.photon_entered_channel;
  if (o.kind == OutcomeKind::Success && o.final_state) t.fidelity = fidelity(*o.final_state, ideal);
  return t;
}

void require_trials(std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
}

// ------------------------------------------------------ stage-composed model

// Per-cycle failure probabilities of one CQZ stage.
struct CqzStage {
  double detector = 0.0;             // per outer cycle
  std::vector<double> inner_blocks;  // per outer cycle, all N inner cycles together
};

CqzStage make_cqz_stage(std::int64_t M, std::int64_t N, double wa, double wp,
                        std::int64_t outer) {
  CqzStage s;
  s.detector = wa * sin2_quarter_turn(1, M);
  const double s2n = sin2_quarter_turn(1, N);
  s.inner_blocks.reserve(static_cast<std::size_t>(outer));
  for (std::int64_t i = 1; i <= outer; ++i) {
    s.inner_blocks.push_back(block_failure(wp * sin2_quarter_turn(i, M) * s2n, static_cast<double>(N)));
  }
  return s;
}

// One DCFO chain of K gates.
struct DcfoStage {
  std::int64_t K = 1;
  double inner_block = 0.0;  // all N inner cycles of one gate
  double detector = 0.0;
};

DcfoStage make_dcfo_stage(std::int64_t K, std::int64_t N, double w) {
  DcfoStage s;
  s.K = K;
  s.inner_block =
      block_failure(w * cos2_quarter_turn(1, K) * sin2_quarter_turn(1, N), static_cast<double>(N));
  s.detector = w * sin2_quarter_turn(1, K);
  return s;
}

// Returns the failure kind, or nullopt if the stage succeeded.
std::optional<OutcomeKind> run_stage(const CqzStage& s, RandomSource& rng) {
  for (double inner : s.inner_blocks) {
    if (bernoulli(rng, s.detector)) return OutcomeKind::DiscardedAtDetector;
    if (bernoulli(rng, inner)) return OutcomeKind::AbsorbedByElectron;
  }
  return std::nullopt;
}

std::optional<OutcomeKind> run_stage(const DcfoStage& s, RandomSource& rng) {
  for (std::int64_t k = 0; k < s.K; ++k) {
    if (bernoulli(rng, s.inner_block)) return OutcomeKind::AbsorbedByElectron;
    if (bernoulli(rng, s.detector)) return OutcomeKind::DiscardedAtDetector;
  }
  return std::nullopt;
}

TrialRecord failed(OutcomeKind kind) {
  TrialRecord t;
  t.kind = kind;
  return t;
}

MonteCarloReport simulate_general(const CycleConfig& cfg, const GeneralInput& in,
                                  std::uint64_t trials, std::uint64_t seed,
                                  ExecutionPolicy policy) {
  const double a2 = std::norm(in.alpha), b2 = std::norm(in.beta);
  const double g2 = std::norm(in.gamma), d2 = std::norm(in.delta);
  const StageProbabilities sp = stage_probabilities_general(cfg, in);
  const CqzStage l2 = make_cqz_stage(cfg.M, cfg.N, a2 * d2, b2 * d2, cfg.M);
  const DcfoStage l3 = make_dcfo_stage(cfg.K, cfg.N, sp.nabla[4]);
  const CqzStage l4 = make_cqz_stage(cfg.M, cfg.N, sp.nabla[7], sp.nabla[8], cfg.M);
  const CqzStage l5 = make_cqz_stage(cfg.M, cfg.N, a2 * g2, b2 * g2, 2 * cfg.M);

  // Both logical branches are exact and input-determined; run them once.
  const Transcript t0 = run_general_postselected(in, 0);
  const Transcript t1 = run_general_postselected(in, 1);
  const double p0 = t0.ancilla_weights[0] / (t0.ancilla_weights[0] + t0.ancilla_weights[1]);
  const double fid[2] = {fidelity(t0.psi6m, expected_output_general(in, 0)),
                         fidelity(t1.psi6m, expected_output_general(in, 1))};

  const auto records = map_trials<TrialRecord>(policy, trials, [&](std::uint64_t i) {
    RandomSource rng = stream_for(seed, i);
    if (auto f = run_stage(l2, rng)) return failed(*f);
    if (auto f = run_stage(l3, rng)) return failed(*f);
    if (auto f = run_stage(l4, rng)) return failed(*f);
    const int m = uniform01(rng) < p0 ? 0 : 1;
    if (m == 1) {
      if (auto f = run_stage(l5, rng)) return failed(*f);
    }
    TrialRecord t;
    t.fidelity = fid[m];
    return t;
  });
  return reduce(records, seed);
}

MonteCarloReport simulate_bell(const CycleConfig& cfg, const BellInput& in, std::uint64_t trials,
                               std::uint64_t seed, ExecutionPolicy policy) {
  const StageProbabilities sp = stage_probabilities_bell(cfg, in);
  const DcfoStage l6 = make_dcfo_stage(cfg.K, cfg.N, sp.nabla[10]);
  const double first = in.ell == 1 ? sp.nabla[9] : sp.nabla[10];
  const double inner = in.ell == 1 ? sp.nabla[10] : sp.nabla[9];
  const CqzStage l7 = make_cqz_stage(cfg.M, cfg.N, first, inner, cfg.M);
  const double fid = fidelity(run_bell(in).psi6m, expected_output_bell(in));

  const auto records = map_trials<TrialRecord>(policy, trials, [&](std::uint64_t i) {
    RandomSource rng = stream_for(seed, i);
    if (auto f = run_stage(l6, rng)) return failed(*f);
    if (auto f = run_stage(l7, rng)) return failed(*f);
    TrialRecord t;
    t.fidelity = fid;
    return t;
  });
  return reduce(records, seed);
}

}  // namespace

void Absorber::validate() const {
  const double n = std::norm(absence) + std::norm(presence);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw std::invalid_argument("absorber amplitudes: squared norm is " + std::to_string(n) +
                                ", expected 1");
  }
}

StateVector ideal_qz_output(Polarization input) {
  return StateVector::basis(kElectronPhotonDims, {1, digit(input)});
}

StateVector ideal_cqz_output(const Absorber& absorber, Polarization input) {
  StateVector out = StateVector::zero(kElectronPhotonDims);
  out.add_term({0, digit(input)}, absorber.absence);
  out.add_term({1, 1 - digit(input)}, absorber.presence);
  return out.normalized();
}

TrajectoryOutcome simulate_qz(const Absorber& absorber, Polarization input, std::int64_t N,
                              AbsorberModel model, RandomSource& rng) {
  absorber.validate();
  require_count(N, "N");
  const double s2 = sin2_quarter_turn(1, N);
  const Polarization flipped = input == Polarization::H ? Polarization::V : Polarization::H;

  if (model == AbsorberModel::PerCycleBorn) {
    const double p = absorber.presence_weight() * s2;
    for (std::int64_t j = 1; j <= N; ++j) {
      if (bernoulli(rng, p)) return absorbed(kStageQz, j);
    }
    if (bernoulli(rng, absorber.presence_weight())) return success(ideal_qz_output(input));
    return discarded(kStageQz, 0, StateVector::basis(kElectronPhotonDims, {0, digit(flipped)}));
  }

  const double c = std::sqrt(1.0 - s2);
  const double s = std::sqrt(s2);
  Joint j = initial_joint(absorber);
  for (std::int64_t cycle = 1; cycle <= N; ++cycle) {
    j.rotate(0, c, s);
    j.rotate(1, c, s);
    // The rotated component of the presence branch is the part that meets the electron.
    if (bernoulli(rng, std::norm(j.x[1][1]) / j.norm2())) return absorbed(kStageQz, cycle);
    j.x[1][1] = 0.0;
    j.renormalize();
  }
  const double p_flip = (std::norm(j.x[0][1]) + std::norm(j.x[1][1])) / j.norm2();
  if (bernoulli(rng, p_flip)) {
    j.x[0][0] = j.x[1][0] = 0.0;
    return discarded(kStageQz, 0, j.to_state(input));
  }
  j.x[0][1] = j.x[1][1] = 0.0;
  return success(j.to_state(input));
}

TrajectoryOutcome simulate_cqz(const Absorber& absorber, Polarization input, std::int64_t M,
                               std::int64_t N, AbsorberModel model, RandomSource& rng) {
  absorber.validate();
  require_count(M, "M");
  require_count(N, "N");
  const double s2m = sin2_quarter_turn(1, M);
  const double s2n = sin2_quarter_turn(1, N);

  if (model == AbsorberModel::PerCycleBorn) {
    const double wa = absorber.absence_weight();
    const double wp = absorber.presence_weight();
    for (std::int64_t i = 1; i <= M; ++i) {
      if (bernoulli(rng, wa * s2m)) return discarded(kStageCqzOuter, i);
      const double p = wp * sin2_quarter_turn(i, M) * s2n;
      for (std::int64_t k = 1; k <= N; ++k) {
        if (bernoulli(rng, p)) return absorbed(kStageCqzInner, i);
      }
    }
    return success(ideal_cqz_output(absorber, input));
  }

  const double cm = std::sqrt(1.0 - s2m), sm = std::sqrt(s2m);
  const double cn = std::sqrt(1.0 - s2n), sn = std::sqrt(s2n);
  Joint j = initial_joint(absorber);
  for (std::int64_t i = 1; i <= M; ++i) {
    j.rotate(0, cm, sm);
    j.rotate(1, cm, sm);
    // Absence: the inner chain rotates the component fully out to the detector.
    if (bernoulli(rng, std::norm(j.x[0][1]) / j.norm2())) return discarded(kStageCqzOuter, i);
    j.x[0][1] = 0.0;
    j.renormalize();
    // Presence: each inner cycle sends a sin(theta_N) fraction toward the electron.
    for (std::int64_t k = 1; k <= N; ++k) {
      const Complex toward = sn * j.x[1][1];
      if (bernoulli(rng, std::norm(toward) / j.norm2())) return absorbed(kStageCqzInner, i);
      j.x[1][1] *= cn;
      j.renormalize();
    }
  }
  return success(j.to_state(input));
}

MonteCarloReport run_qz_trials(const Absorber& absorber, Polarization input, std::int64_t N,
                               AbsorberModel model, std::uint64_t trials, std::uint64_t seed,
                               ExecutionPolicy policy) {
  require_trials(trials);
  absorber.validate();
  require_count(N, "N");
  const StateVector ideal = ideal_qz_output(input);
  const auto records = map_trials<TrialRecord>(policy, trials, [&](std::uint64_t i) {
    RandomSource rng = stream_for(seed, i);
    return record_of(simulate_qz(absorber, input, N, model, rng), ideal);
  });
  return reduce(records, seed);
}

MonteCarloReport run_cqz_trials(const Absorber& absorber, Polarization input, std::int64_t M,
                                std::int64_t N, AbsorberModel model, std::uint64_t trials,
                                std::uint64_t seed, ExecutionPolicy policy) {
  require_trials(trials);
  absorber.validate();
  require_count(M, "M");
  require_count(N, "N");
  const StateVector ideal = ideal_cqz_output(absorber, input);
  const auto records = map_trials<TrialRecord>(policy, trials, [&](std::uint64_t i) {
    RandomSource rng = stream_for(seed, i);
    return record_of(simulate_cqz(absorber, input, M, N, model, rng), ideal);
  });
  return reduce(records, seed);
}

MonteCarloReport simulate_cct(const CycleConfig& cfg, const ProtocolInput& input,
                              std::uint64_t trials, std::uint64_t seed, ExecutionPolicy policy) {
  require_trials(trials);
  cfg.validate();
  if (const auto* g = std::get_if<GeneralInput>(&input)) {
    return simulate_general(cfg, *g, trials, seed, policy);
  }
  return simulate_bell(cfg, std::get<BellInput>(input), trials, seed, policy);
}

double expected_abort_rate(const CycleConfig& cfg, const ProtocolInput& input) {
  if (const auto* g = std::get_if<GeneralInput>(&input)) {
    const StageProbabilities sp = stage_probabilities_general(cfg, *g);
    const Transcript t = run_general_postselected(*g, 0);
    const double p0 = t.ancilla_weights[0] / (t.ancilla_weights[0] + t.ancilla_weights[1]);
    return p0 * sp.zeta_m[0] + (1.0 - p0) * sp.zeta_m[1];
  }
  return stage_probabilities_bell(cfg, std::get<BellInput>(input)).zeta;
}

}  // namespace cct
