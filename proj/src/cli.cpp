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

#include "cct/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cct/acceptance.hpp"

#ifndef CCTSIM_VERSION
#define CCTSIM_VERSION "0.0.0"
#endif

namespace cct {
namespace {

const char* mode_name(Mode m) { return m == Mode::General ? "general" : "bell"; }

const char* axis_name(SweepAxis a) {
  switch (a) {
    case SweepAxis::M:
      return "M";
    case SweepAxis::N:
      return "N";
    case SweepAxis::K:
      return "K";
    case SweepAxis::Diag:
      return "diag";
  }
  return "?";
}

Complex parse_complex(const Json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError(field, "expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double parse_real(const Json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
  return v;
}

std::int64_t parse_count(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 1) throw ConfigError(field, "must be >= 1, got " + std::to_string(v));
  return v;
}

std::uint64_t parse_unsigned(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw ConfigError(field, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw ConfigError("format", "expected json or csv, got '" + s + "'");
}

std::string format_name(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

void validate_inputs(const RunConfig& cfg) {
  try {
    if (cfg.mode == Mode::General) {
      cfg.general.validate();
    } else {
      cfg.bell.validate();
    }
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    // Input validators lead their messages with the offending field names.
    const auto colon = what.find(':');
    const auto space = what.find(' ');
    const std::string field = colon != std::string::npos ? what.substr(0, colon) : what.substr(0, space);
    throw ConfigError(field, what);
  }
}

ProtocolInput protocol_input(const RunConfig& cfg) {
  if (cfg.mode == Mode::General) return cfg.general;
  return cfg.bell;
}

StageProbabilities stage_probabilities(const RunConfig& cfg, const CycleConfig& cycles) {
  return cfg.mode == Mode::General ? stage_probabilities_general(cycles, cfg.general)
                                   : stage_probabilities_bell(cycles, cfg.bell);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_number_or_empty(const Json& j) {
  return j.is_number() ? csv_number(j.get<double>()) : std::string();
}

double z_score(double observed, double expected, std::uint64_t trials) {
  const double se = std::sqrt(expected * (1.0 - expected) / static_cast<double>(trials));
  if (se == 0.0) return observed == expected ? 0.0 : INFINITY;
  return std::abs(observed - expected) / se;
}

}  // namespace

RunConfig default_config() {
  const double r = 1.0 / std::sqrt(2.0);
  const EulerAngles angles{0.0, std::numbers::pi / 2.0, 0.0};
  RunConfig cfg;
  cfg.general.alpha = cfg.general.beta = cfg.general.gamma = cfg.general.delta = Complex{r, 0.0};
  cfg.general.angles = angles;
  cfg.bell.c0 = cfg.bell.c1 = Complex{r, 0.0};
  cfg.bell.angles = angles;
  return cfg;
}

RunConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "expected a JSON object");
  RunConfig cfg = default_config();
  for (const auto& [key, value] : doc.items()) {
    if (key == "mode") {
      if (!value.is_string()) throw ConfigError(key, "expected \"general\" or \"bell\"");
      const auto s = value.get<std::string>();
      if (s == "general") {
        cfg.mode = Mode::General;
      } else if (s == "bell") {
        cfg.mode = Mode::Bell;
      } else {
        throw ConfigError(key, "expected \"general\" or \"bell\", got '" + s + "'");
      }
    } else if (key == "alpha") {
      cfg.general.alpha = parse_complex(value, key);
    } else if (key == "beta") {
      cfg.general.beta = parse_complex(value, key);
    } else if (key == "gamma") {
      cfg.general.gamma = parse_complex(value, key);
    } else if (key == "delta") {
      cfg.general.delta = parse_complex(value, key);
    } else if (key == "c0") {
      cfg.bell.c0 = parse_complex(value, key);
    } else if (key == "c1") {
      cfg.bell.c1 = parse_complex(value, key);
    } else if (key == "ell") {
      if (!value.is_number_integer()) throw ConfigError(key, "expected 0 or 1");
      cfg.bell.ell = value.get<int>();
    } else if (key == "sign") {
      if (!value.is_number_integer()) throw ConfigError(key, "expected +1 or -1");
      cfg.bell.sign = value.get<int>();
    } else if (key == "angles") {
      if (!value.is_object()) throw ConfigError(key, "expected {phi, theta, varphi}");
      EulerAngles a{};
      for (const auto& [name, v] : value.items()) {
        const std::string field = "angles." + name;
        if (name == "phi") {
          a.phi = parse_real(v, field);
        } else if (name == "theta") {
          a.theta = parse_real(v, field);
        } else if (name == "varphi") {
          a.varphi = parse_real(v, field);
        } else {
          throw ConfigError(field, "unknown field");
        }
      }
      cfg.general.angles = cfg.bell.angles = a;
    } else if (key == "M") {
      cfg.cycles.M = parse_count(value, key);
    } else if (key == "N") {
      cfg.cycles.N = parse_count(value, key);
    } else if (key == "K") {
      cfg.cycles.K = parse_count(value, key);
    } else if (key == "trials") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
        throw ConfigError(key, "must be an integer >= 1");
      }
      cfg.trials = value.get<std::uint64_t>();
    } else if (key == "seed") {
      cfg.seed = parse_unsigned(value, key);
    } else if (key == "output") {
      if (!value.is_string()) throw ConfigError(key, "expected a path string");
      cfg.output = value.get<std::string>();
    } else if (key == "format") {
      if (!value.is_string()) throw ConfigError(key, "expected json or csv");
      cfg.format = parse_format(value.get<std::string>());
    } else {
      throw ConfigError(key, "unknown field");
    }
  }
  validate_inputs(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ConfigError("<syntax>", path + ":" + std::to_string(line) + ": " + e.what());
  }
  return parse_config(doc);
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["mode"] = mode_name(cfg.mode);
  if (cfg.mode == Mode::General) {
    j["alpha"] = complex_json(cfg.general.alpha);
    j["beta"] = complex_json(cfg.general.beta);
    j["gamma"] = complex_json(cfg.general.gamma);
    j["delta"] = complex_json(cfg.general.delta);
  } else {
    j["ell"] = cfg.bell.ell;
    j["sign"] = cfg.bell.sign;
    j["c0"] = complex_json(cfg.bell.c0);
    j["c1"] = complex_json(cfg.bell.c1);
  }
  const EulerAngles& a = cfg.mode == Mode::General ? cfg.general.angles : cfg.bell.angles;
  j["angles"] = {{"phi", a.phi}, {"theta", a.theta}, {"varphi", a.varphi}};
  j["M"] = cfg.cycles.M;
  j["N"] = cfg.cycles.N;
  j["K"] = cfg.cycles.K;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["output"] = cfg.output;
  j["format"] = format_name(cfg.format);
  return j;
}

Json make_report(const RunConfig& cfg, Json results) {
  Json j;
  j["config"] = config_json(cfg);
  j["results"] = std::move(results);
  j["version"] = CCTSIM_VERSION;
  j["seed"] = cfg.seed;
  return j;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// --------------------------------------------------------------------- run

CommandOutput cmd_run(const RunConfig& cfg) {
  validate_inputs(cfg);
  CommandOutput out;
  Json r;
  r["mode"] = mode_name(cfg.mode);
  Transcript t;
  VerificationReport v;
  StateVector expected;
  if (cfg.mode == Mode::General) {
    RandomSource rng = stream_for(cfg.seed, 0);
    t = run_general(cfg.general, rng);
    v = verify_general(t, cfg.general);
    expected = expected_output_general(cfg.general, *t.m);
    r["m"] = *t.m;
    r["outcome_probability"] = t.outcome_probability;
    r["ancilla_weights"] = t.ancilla_weights;
  } else {
    t = run_bell(cfg.bell);
    v = verify_bell(t, cfg.bell);
    expected = expected_output_bell(cfg.bell);
    r["m"] = nullptr;
    r["ancilla_zero_weight"] = t.ancilla_weights[0];
  }
  const std::size_t rank = schmidt_rank(t.psi6m, {kAlice});
  r["output_state"] = state_json(t.psi6m);
  r["expected_output"] = state_json(expected);
  r["schmidt_rank"] = rank;
  r["separable_output"] = rank == 1;
  r["verification"] = verification_json(v);
  r["stage_probabilities"] = stage_probabilities_json(stage_probabilities(cfg, cfg.cycles));
  r["pass"] = v.pass && v.forms_agree;
  out.exit_code = (v.pass && v.forms_agree) ? kExitOk : kExitVerificationFailure;

  std::ostringstream csv;
  csv << "stage,fidelity\n";
  for (const auto& s : v.stages) csv << s.stage << ',' << csv_number(s.fidelity) << '\n';
  out.csv = csv.str();
  out.results = std::move(r);
  return out;
}

// ------------------------------------------------------------------- sweep

SweepAxis parse_axis(const std::string& name) {
  if (name == "M") return SweepAxis::M;
  if (name == "N") return SweepAxis::N;
  if (name == "K") return SweepAxis::K;
  if (name == "diag") return SweepAxis::Diag;
  throw ConfigError("--axis", "expected M, N, K or diag, got '" + name + "'");
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {
      "value",   "M",       "N",       "K",       "lambda0", "lambda1", "lambda2", "lambda3",
      "lambda4", "lambda5", "lambda6", "lambda7", "zeta0",   "zeta1",   "zeta"};
  return cols;
}

CommandOutput cmd_sweep(const RunConfig& cfg, SweepAxis axis, const std::vector<std::int64_t>& values) {
  validate_inputs(cfg);
  if (values.empty()) throw ConfigError("--values", "at least one value is required");
  CommandOutput out;
  std::ostringstream csv;
  const auto& cols = sweep_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) csv << (i ? "," : "") << cols[i];
  csv << '\n';
  Json rows = Json::array();
  for (std::int64_t v : values) {
    if (v < 1) throw ConfigError("--values", "cycle counts must be >= 1, got " + std::to_string(v));
    CycleConfig c = cfg.cycles;
    if (axis == SweepAxis::M || axis == SweepAxis::Diag) c.M = v;
    if (axis == SweepAxis::N || axis == SweepAxis::Diag) c.N = v;
    if (axis == SweepAxis::K || axis == SweepAxis::Diag) c.K = v;
    const StageProbabilities p = stage_probabilities(cfg, c);
    Json row;
    row["value"] = v;
    row["M"] = c.M;
    row["N"] = c.N;
    row["K"] = c.K;
    for (std::size_t i = 0; i < p.lambda.size(); ++i) row["lambda" + std::to_string(i)] = p.lambda[i];
    row["zeta0"] = p.zeta_m[0];
    row["zeta1"] = p.zeta_m[1];
    row["zeta"] = p.zeta;
    rows.push_back(row);

    csv << v << ',' << c.M << ',' << c.N << ',' << c.K;
    for (double l : p.lambda) csv << ',' << csv_number(l);
    csv << ',' << csv_number(p.zeta_m[0]) << ',' << csv_number(p.zeta_m[1]) << ','
        << csv_number(p.zeta) << '\n';
  }
  out.results = {{"mode", mode_name(cfg.mode)}, {"axis", axis_name(axis)}, {"columns", cols}, {"rows", rows}};
  out.csv = csv.str();
  return out;
}

// -------------------------------------------------------------- montecarlo

CommandOutput cmd_montecarlo(const RunConfig& cfg, const MonteCarloOptions& options) {
  validate_inputs(cfg);
  if (cfg.trials < 1) throw ConfigError("trials", "must be >= 1");
  cfg.cycles.validate();
  CommandOutput out;
  Json r;
  MonteCarloReport rep;
  Json expected = nullptr;
  const std::int64_t M = cfg.cycles.M, N = cfg.cycles.N;

  if (options.gate == CampaignGate::Protocol) {
    const ProtocolInput input = protocol_input(cfg);
    rep = simulate_cct(cfg.cycles, input, cfg.trials, cfg.seed, options.policy);
    expected = expected_abort_rate(cfg.cycles, input);
    r["gate"] = "protocol";
    r["mode"] = mode_name(cfg.mode);
    r["model"] = "stage-composed";
  } else {
    const double w = options.presence_weight;
    if (!(w >= 0.0 && w <= 1.0)) throw ConfigError("--presence", "must lie in [0, 1]");
    const Absorber absorber{{std::sqrt(1.0 - w), 0.0}, {std::sqrt(w), 0.0}};
    if (options.gate == CampaignGate::Qz) {
      rep = run_qz_trials(absorber, Polarization::H, N, options.model, cfg.trials, cfg.seed, options.policy);
      expected = 1.0 - (options.model == AbsorberModel::PerCycleBorn ? cepi_success(N, w)
                                                                     : qz_success_coherent(N, w));
      r["gate"] = "qz";
    } else {
      rep = run_cqz_trials(absorber, Polarization::H, M, N, options.model, cfg.trials, cfg.seed,
                           options.policy);
      if (options.model == AbsorberModel::PerCycleBorn) expected = 1.0 - cqz_success(M, N, 1.0 - w, w, M);
      r["gate"] = "cqz";
    }
    r["model"] = to_string(options.model);
    r["presence_weight"] = w;
  }
  r["report"] = report_json(rep);
  r["expected_abort_rate"] = expected;
  r["deviation_se"] =
      expected.is_number() ? Json(z_score(rep.abort_rate, expected.get<double>(), rep.trials)) : Json(nullptr);
  out.exit_code = rep.counterfactual_violations == 0 ? kExitOk : kExitVerificationFailure;

  std::ostringstream csv;
  csv << "gate,model,trials,successes,absorbed,discarded,abort_rate,standard_error,"
         "conditional_fidelity,counterfactual_violations,seed,expected_abort_rate\n";
  csv << r["gate"].get<std::string>() << ',' << r["model"].get<std::string>() << ',' << rep.trials
      << ',' << rep.successes << ',' << rep.absorbed << ',' << rep.discarded << ','
      << csv_number(rep.abort_rate) << ',' << csv_number(rep.standard_error) << ','
      << (rep.conditional_fidelity ? csv_number(*rep.conditional_fidelity) : std::string()) << ','
      << rep.counterfactual_violations << ',' << rep.seed << ',' << json_number_or_empty(expected)
      << '\n';
  out.csv = csv.str();
  out.results = std::move(r);
  return out;
}

// ------------------------------------------------------------------ verify

CommandOutput cmd_verify(const RunConfig& cfg, const std::string& inject_fault) {
  AcceptanceOptions o;
  o.seed = cfg.seed;
  o.inject_fault = inject_fault;
  const auto results = run_acceptance(o);
  CommandOutput out;
  Json arr = Json::array();
  std::ostringstream csv;
  csv << "id,name,passed,seconds,detail\n";
  bool all = true;
  for (const auto& c : results) {
    all = all && c.passed;
    arr.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"seconds", c.seconds},
                   {"detail", c.detail}});
    csv << c.id << ',' << c.name << ',' << (c.passed ? "true" : "false") << ','
        << csv_number(c.seconds) << ',' << csv_quote(c.detail) << '\n';
  }
  out.results = {{"criteria", arr}, {"all_passed", all}};
  out.csv = csv.str();
  out.exit_code = all ? kExitOk : kExitVerificationFailure;
  return out;
}

// ------------------------------------------------------------------- entry

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

namespace {

struct CommonFlags {
  CLI::Option* config = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* trials = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
};

struct FlagValues {
  std::string config;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::string out;
  std::string format;
};

CommonFlags add_common(CLI::App* sub, FlagValues& v) {
  CommonFlags f;
  f.config = sub->add_option("--config", v.config, "JSON configuration file");
  f.seed = sub->add_option("--seed", v.seed, "master random seed");
  f.trials = sub->add_option("--trials", v.trials, "Monte Carlo trials");
  f.out = sub->add_option("--out", v.out, "output path (default: standard output)");
  f.format = sub->add_option("--format", v.format, "json or csv");
  return f;
}

RunConfig resolve_config(const CommonFlags& f, const FlagValues& v) {
  RunConfig cfg = f.config->count() ? load_config(v.config) : default_config();
  if (f.seed->count()) cfg.seed = v.seed;
  if (f.trials->count()) {
    if (v.trials < 1) throw ConfigError("--trials", "must be >= 1, got " + std::to_string(v.trials));
    cfg.trials = static_cast<std::uint64_t>(v.trials);
  }
  if (f.out->count()) cfg.output = v.out;
  if (f.format->count()) cfg.format = parse_format(v.format);
  return cfg;
}

void emit(const RunConfig& cfg, const CommandOutput& result, std::ostream& out) {
  const std::string text = cfg.format == OutputFormat::Csv
                               ? result.csv
                               : make_report(cfg, result.results).dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_atomically(cfg.output, text);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cctsim: concealed telecomputation simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CCTSIM_VERSION);

  FlagValues values;
  auto* run = app.add_subcommand("run", "execute and verify the logical protocol once");
  const CommonFlags run_flags = add_common(run, values);

  auto* sweep = app.add_subcommand("sweep", "tabulate stage probabilities over cycle counts");
  const CommonFlags sweep_flags = add_common(sweep, values);
  std::string axis = "diag";
  std::vector<std::int64_t> sweep_values;
  sweep->add_option("--axis", axis, "M, N, K or diag")->capture_default_str();
  sweep->add_option("--values", sweep_values, "comma-separated cycle counts")->delimiter(',')->required();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  const CommonFlags verify_flags = add_common(verify, values);
  std::string fault;
  verify->add_option("--inject-fault", fault, "corrupt the named gate")->group("");

  auto* mc = app.add_subcommand("montecarlo", "run a seeded Monte Carlo campaign");
  const CommonFlags mc_flags = add_common(mc, values);
  std::string gate = "protocol";
  std::string model = "per-cycle-born";
  double presence = 0.5;
  bool serial = false;
  mc->add_option("--gate", gate, "protocol, qz or cqz")->capture_default_str();
  mc->add_option("--model", model, "per-cycle-born or coherent (gate campaigns)")->capture_default_str();
  mc->add_option("--presence", presence, "absorber presence weight (gate campaigns)")->capture_default_str();
  mc->add_flag("--serial", serial, "use the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (run->parsed()) {
      const RunConfig cfg = resolve_config(run_flags, values);
      const CommandOutput r = cmd_run(cfg);
      emit(cfg, r, out);
      return r.exit_code;
    }
    if (sweep->parsed()) {
      const RunConfig cfg = resolve_config(sweep_flags, values);
      const CommandOutput r = cmd_sweep(cfg, parse_axis(axis), sweep_values);
      emit(cfg, r, out);
      return r.exit_code;
    }
    if (mc->parsed()) {
      const RunConfig cfg = resolve_config(mc_flags, values);
      MonteCarloOptions o;
      if (gate == "protocol") {
        o.gate = CampaignGate::Protocol;
      } else if (gate == "qz") {
        o.gate = CampaignGate::Qz;
      } else if (gate == "cqz") {
        o.gate = CampaignGate::Cqz;
      } else {
        throw ConfigError("--gate", "expected protocol, qz or cqz, got '" + gate + "'");
      }
      if (model == "per-cycle-born") {
        o.model = AbsorberModel::PerCycleBorn;
      } else if (model == "coherent") {
        o.model = AbsorberModel::Coherent;
      } else {
        throw ConfigError("--model", "expected per-cycle-born or coherent, got '" + model + "'");
      }
      o.presence_weight = presence;
      o.policy = serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
      const CommandOutput r = cmd_montecarlo(cfg, o);
      emit(cfg, r, out);
      return r.exit_code;
    }
    if (verify->parsed()) {
      RunConfig cfg = resolve_config(verify_flags, values);
      if (!fault.empty()) {
        const auto names = fault_targets();
        if (std::find(names.begin(), names.end(), fault) == names.end()) {
          throw ConfigError("--inject-fault", "unknown gate '" + fault + "'");
        }
      }
      const CommandOutput r = cmd_verify(cfg, fault);
      for (const auto& c : r.results["criteria"]) {
        CriterionResult cr;
        cr.id = c["id"].get<int>();
        cr.name = c["name"].get<std::string>();
        cr.passed = c["passed"].get<bool>();
        cr.seconds = c["seconds"].get<double>();
        cr.detail = c["detail"].get<std::string>();
        out << format_result(cr) << "\n";
      }
      if (!cfg.output.empty()) emit(cfg, r, out);
      return r.exit_code;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitConfigError;
}

}  // namespace cct
