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

// Command-line front end: configuration loading and the four subcommands.
// Every command returns a report document; run_cli() handles flags, output
// files and exit codes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cct/report.hpp"
#include "cct/zeno.hpp"
#include "cct/zeno_sim.hpp"

namespace cct {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitConfigError = 2;

/// Invalid configuration; `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("config field '" + field + "': " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Mode { General, Bell };
enum class OutputFormat { Json, Csv };

struct RunConfig {
  Mode mode = Mode::General;
  GeneralInput general;  // used when mode == General
  BellInput bell;        // used when mode == Bell
  CycleConfig cycles;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  std::string output;  // empty: standard output
  OutputFormat format = OutputFormat::Json;
};

/// Balanced amplitudes (all 1/sqrt 2), theta = pi/2, M = N = K = 25.
RunConfig default_config();

/// Starts from default_config() and applies the fields present in `doc`.
/// Unknown fields, wrong types and invalid amplitudes raise ConfigError.
RunConfig parse_config(const Json& doc);

/// Reads and parses a JSON file. Syntax errors name the line.
RunConfig load_config(const std::string& path);

Json config_json(const RunConfig& cfg);

/// Top-level report document: {config, results, version, seed}.
Json make_report(const RunConfig& cfg, Json results);

struct CommandOutput {
  Json results;
  std::string csv;  // filled when the command supports CSV
  int exit_code = kExitOk;
};

/// Executes the logical protocol once and verifies every stage.
CommandOutput cmd_run(const RunConfig& cfg);

enum class SweepAxis { M, N, K, Diag };
SweepAxis parse_axis(const std::string& name);

/// Column order of the sweep table.
const std::vector<std::string>& sweep_columns();

CommandOutput cmd_sweep(const RunConfig& cfg, SweepAxis axis, const std::vector<std::int64_t>& values);

enum class CampaignGate { Protocol, Qz, Cqz };

struct MonteCarloOptions {
  CampaignGate gate = CampaignGate::Protocol;
  AbsorberModel model = AbsorberModel::PerCycleBorn;
  double presence_weight = 0.5;  // absorber for gate-level campaigns
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

CommandOutput cmd_montecarlo(const RunConfig& cfg, const MonteCarloOptions& options = {});

CommandOutput cmd_verify(const RunConfig& cfg, const std::string& inject_fault = {});

/// Formats a double with 17 significant digits.
std::string csv_number(double v);

/// Writes `content` to `path` through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& content);

/// Full command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cct
