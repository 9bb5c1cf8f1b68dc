// Copyright 2026 The hllab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HLLAB_RUNNER_HPP
#define HLLAB_RUNNER_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hllab/table.hpp"

namespace hllab {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of an experiment run.
enum ExitCode : int {
  kExitOk = 0,       // all in-config checks passed
  kExitNumeric = 1,  // ran to completion, at least one check failed
  kExitSchema = 2,   // config rejected; no output files written
  kExitIo = 3,       // could not read an input or write an output
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ParamKind { Int, Num, Str, Bool, IntList, NumList, PairList, Json };

struct ParamSpec {
  std::string name;
  ParamKind kind;
  nlohmann::json default_value;
  /// tolerance-like knobs may also be set through "tolerance_overrides"
  bool tolerance = false;
};

/// Parsed and validated experiment configuration. `parameters` holds the
/// full resolved set (defaults merged, overrides applied).
struct ExperimentConfig {
  int schema_version = 1;
  std::string experiment;
  std::uint64_t seed = 1;
  std::string output;
  nlohmann::json parameters;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double target = 0.0;
  std::string detail;
};

/// Scratch the experiment body fills while it runs.
struct RunContext {
  std::vector<CheckResult> checks;
  /// per-row seeds for the manifest (0 for deterministic rows)
  std::vector<std::uint64_t> row_seeds;
  nlohmann::json extra;  // experiment-specific manifest payload
};

struct ExperimentInfo {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
  std::function<Table(const ExperimentConfig&, RunContext&)> run;
};

const std::vector<ExperimentInfo>& experiment_registry();
const ExperimentInfo* find_experiment(const std::string& name);

/// Throws SchemaError on any shape, type, unknown-key or unknown-experiment
/// problem. Never touches the filesystem.
ExperimentConfig parse_config(const nlohmann::json& j);

/// Config with every parameter at its default, ready to edit.
nlohmann::json default_config_json(const std::string& experiment);

nlohmann::json config_to_json(const ExperimentConfig& cfg);

struct RunOutput {
  int exit_code = kExitOk;
  Table table{std::vector<std::string>{"empty"}};
  nlohmann::json manifest;
};

/// Runs the experiment without touching the filesystem.
RunOutput run_experiment_in_memory(const ExperimentConfig& cfg);

/// Runs and writes <output>/<experiment>.csv plus <output>/manifest.json.
/// Throws IoError when the output directory or files cannot be written.
int run_experiment(const ExperimentConfig& cfg);

/// Full pipeline with the documented exit-code mapping; never throws.
/// On failure `message` carries a human-readable reason.
int run_config_json(const nlohmann::json& config, std::string* message);

// parameter accessors (parameters are pre-validated, so these only throw
// on programming errors)
double as_exponent(const nlohmann::json& v);  // positive number or "inf"
double param_num(const ExperimentConfig& cfg, const char* name);
/// plain number, any sign (for thresholds with 0 = disabled)
double param_num_any(const ExperimentConfig& cfg, const char* name);
long param_int(const ExperimentConfig& cfg, const char* name);
std::string param_str(const ExperimentConfig& cfg, const char* name);
bool param_bool(const ExperimentConfig& cfg, const char* name);
std::vector<double> param_num_list(const ExperimentConfig& cfg, const char* name);
std::vector<int> param_int_list(const ExperimentConfig& cfg, const char* name);
std::vector<std::pair<double, double>> param_pair_list(const ExperimentConfig& cfg, const char* name);
const nlohmann::json& param_json(const ExperimentConfig& cfg, const char* name);

}  // namespace hllab

#endif
