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

#include "hllab/runner.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "hllab/scalar.hpp"

namespace hllab {

using nlohmann::json;

const ExperimentInfo* find_experiment(const std::string& name) {
  for (const ExperimentInfo& info : experiment_registry()) {
    if (info.name == name) return &info;
  }
  return nullptr;
}

namespace {

bool value_matches_kind(const json& v, ParamKind kind) {
  switch (kind) {
    case ParamKind::Int:
      return v.is_number_integer();
    case ParamKind::Num:
      return v.is_number() || (v.is_string() && (v == "inf" || v == "Infinity"));
    case ParamKind::Str:
      return v.is_string();
    case ParamKind::Bool:
      return v.is_boolean();
    case ParamKind::IntList: {
      if (!v.is_array()) return false;
      for (const json& e : v) {
        if (!e.is_number_integer()) return false;
      }
      return true;
    }
    case ParamKind::NumList: {
      if (!v.is_array()) return false;
      for (const json& e : v) {
        if (!value_matches_kind(e, ParamKind::Num)) return false;
      }
      return true;
    }
    case ParamKind::PairList: {
      if (!v.is_array()) return false;
      for (const json& e : v) {
        if (!e.is_array() || e.size() != 2) return false;
        if (!value_matches_kind(e[0], ParamKind::Num)) return false;
        if (!value_matches_kind(e[1], ParamKind::Num)) return false;
      }
      return true;
    }
    case ParamKind::Json:
      return true;
  }
  return false;
}

const ParamSpec* find_param(const ExperimentInfo& info, const std::string& name) {
  for (const ParamSpec& spec : info.params) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw SchemaError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "schema_version" && key != "experiment" && key != "seed" &&
        key != "output" && key != "parameters" && key != "tolerance_overrides") {
      throw SchemaError("unknown config key '" + key + "'");
    }
  }
  ExperimentConfig cfg;
  if (j.contains("schema_version")) {
    if (!j.at("schema_version").is_number_integer() || j.at("schema_version").get<int>() != 1)
      throw SchemaError("unsupported schema_version (expected 1)");
  }
  cfg.schema_version = 1;
  if (!j.contains("experiment") || !j.at("experiment").is_string())
    throw SchemaError("config needs a string 'experiment' field");
  cfg.experiment = j.at("experiment").get<std::string>();
  const ExperimentInfo* info = find_experiment(cfg.experiment);
  if (!info) throw SchemaError("unknown experiment '" + cfg.experiment + "'");

  if (j.contains("seed")) {
    const json& s = j.at("seed");
    if (!s.is_number_integer() || (s.is_number_integer() && s.get<long long>() < 0))
      throw SchemaError("'seed' must be a non-negative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  if (j.contains("output")) {
    if (!j.at("output").is_string()) throw SchemaError("'output' must be a string");
    cfg.output = j.at("output").get<std::string>();
  } else {
    cfg.output = "out/" + cfg.experiment;
  }

  // defaults, then explicit parameters, then tolerance overrides
  json params = json::object();
  for (const ParamSpec& spec : info->params) params[spec.name] = spec.default_value;
  if (j.contains("parameters")) {
    const json& given = j.at("parameters");
    if (!given.is_object()) throw SchemaError("'parameters' must be an object");
    for (const auto& [key, value] : given.items()) {
      const ParamSpec* spec = find_param(*info, key);
      if (!spec) throw SchemaError("unknown parameter '" + key + "' for experiment '" + cfg.experiment + "'");
      if (!value_matches_kind(value, spec->kind))
        throw SchemaError("parameter '" + key + "' has the wrong type");
      params[key] = value;
    }
  }
  if (j.contains("tolerance_overrides")) {
    const json& given = j.at("tolerance_overrides");
    if (!given.is_object()) throw SchemaError("'tolerance_overrides' must be an object");
    for (const auto& [key, value] : given.items()) {
      const ParamSpec* spec = find_param(*info, key);
      if (!spec || !spec->tolerance)
        throw SchemaError("unknown tolerance override '" + key + "'");
      if (!value_matches_kind(value, spec->kind))
        throw SchemaError("tolerance override '" + key + "' has the wrong type");
      params[key] = value;
    }
  }
  cfg.parameters = std::move(params);
  return cfg;
}

json default_config_json(const std::string& experiment) {
  const ExperimentInfo* info = find_experiment(experiment);
  if (!info) throw SchemaError("unknown experiment '" + experiment + "'");
  json params = json::object();
  for (const ParamSpec& spec : info->params) params[spec.name] = spec.default_value;
  return json{{"schema_version", 1},
              {"experiment", experiment},
              {"seed", 1},
              {"output", "out/" + experiment},
              {"parameters", std::move(params)}};
}

json config_to_json(const ExperimentConfig& cfg) {
  return json{{"schema_version", cfg.schema_version},
              {"experiment", cfg.experiment},
              {"seed", cfg.seed},
              {"output", cfg.output},
              {"parameters", cfg.parameters}};
}

RunOutput run_experiment_in_memory(const ExperimentConfig& cfg) {
  const ExperimentInfo* info = find_experiment(cfg.experiment);
  if (!info) throw SchemaError("unknown experiment '" + cfg.experiment + "'");

  RunOutput out;
  const std::string started = iso_timestamp();
  const auto t0 = std::chrono::steady_clock::now();
  RunContext ctx;
  out.table = info->run(cfg, ctx);
  const double wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool pass = true;
  json checks = json::array();
  for (const CheckResult& c : ctx.checks) {
    pass = pass && c.pass;
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"value", c.value},
                      {"target", c.target},
                      {"detail", c.detail}});
  }
  json cells = json::array();
  for (std::size_t i = 0; i < ctx.row_seeds.size(); ++i) {
    cells.push_back({{"row", i}, {"seed", ctx.row_seeds[i]}});
  }
  out.manifest = json{{"library_version", kVersion},
                      {"config", config_to_json(cfg)},
                      {"started", started},
                      {"finished", iso_timestamp()},
                      {"wall_seconds", wall_seconds},
                      {"rows", out.table.row_count()},
                      {"cells", std::move(cells)},
                      {"checks", std::move(checks)},
                      {"pass", pass}};
  if (!ctx.extra.is_null()) out.manifest["extra"] = std::move(ctx.extra);
  out.exit_code = pass ? kExitOk : kExitNumeric;
  return out;
}

int run_experiment(const ExperimentConfig& cfg) {
  RunOutput out = run_experiment_in_memory(cfg);
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.output, ec);
  if (ec) throw IoError("cannot create output directory '" + cfg.output + "': " + ec.message());
  const fs::path csv_path = fs::path(cfg.output) / (cfg.experiment + ".csv");
  const fs::path manifest_path = fs::path(cfg.output) / "manifest.json";
  {
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + csv_path.string() + "' for writing");
    f << out.table.to_csv();
    if (!f) throw IoError("failed writing '" + csv_path.string() + "'");
  }
  {
    std::ofstream f(manifest_path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + manifest_path.string() + "' for writing");
    f << out.manifest.dump(2) << '\n';
    if (!f) throw IoError("failed writing '" + manifest_path.string() + "'");
  }
  return out.exit_code;
}

int run_config_json(const json& config, std::string* message) {
  try {
    const ExperimentConfig cfg = parse_config(config);
    const int code = run_experiment(cfg);
    if (code == kExitNumeric && message)
      *message = "one or more acceptance checks failed (see the manifest)";
    return code;
  } catch (const SchemaError& e) {
    if (message) *message = e.what();
    return kExitSchema;
  } catch (const IoError& e) {
    if (message) *message = e.what();
    return kExitIo;
  } catch (const std::exception& e) {
    if (message) *message = e.what();
    return kExitNumeric;
  }
}

double as_exponent(const json& v) {
  if (v.is_number()) {
    const double d = v.get<double>();
    if (!(d > 0.0)) throw SchemaError("exponent values must be positive");
    return d;
  }
  if (v.is_string() && (v == "inf" || v == "Infinity")) return kInf;
  throw SchemaError("expected a positive number or \"inf\"");
}

double param_num(const ExperimentConfig& cfg, const char* name) {
  return as_exponent(cfg.parameters.at(name));
}

double param_num_any(const ExperimentConfig& cfg, const char* name) {
  const nlohmann::json& v = cfg.parameters.at(name);
  if (v.is_string()) return kInf;
  return v.get<double>();
}

long param_int(const ExperimentConfig& cfg, const char* name) {
  return cfg.parameters.at(name).get<long>();
}

std::string param_str(const ExperimentConfig& cfg, const char* name) {
  return cfg.parameters.at(name).get<std::string>();
}

bool param_bool(const ExperimentConfig& cfg, const char* name) {
  return cfg.parameters.at(name).get<bool>();
}

std::vector<double> param_num_list(const ExperimentConfig& cfg, const char* name) {
  std::vector<double> out;
  for (const json& e : cfg.parameters.at(name)) out.push_back(as_exponent(e));
  return out;
}

std::vector<int> param_int_list(const ExperimentConfig& cfg, const char* name) {
  std::vector<int> out;
  for (const json& e : cfg.parameters.at(name)) out.push_back(e.get<int>());
  return out;
}

std::vector<std::pair<double, double>> param_pair_list(const ExperimentConfig& cfg, const char* name) {
  std::vector<std::pair<double, double>> out;
  for (const json& e : cfg.parameters.at(name)) out.emplace_back(as_exponent(e[0]), as_exponent(e[1]));
  return out;
}

const nlohmann::json& param_json(const ExperimentConfig& cfg, const char* name) {
  return cfg.parameters.at(name);
}

}  // namespace hllab
