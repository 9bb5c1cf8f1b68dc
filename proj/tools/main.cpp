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

// Command line front end. All numerical work happens behind the hllab C
// API; this binary only parses arguments, assembles config JSON and maps
// exit codes through.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hllab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSchema = 2;
constexpr int kExitIo = 3;

int cmd_list() {
  char* text = nullptr;
  if (hll_list_experiments(&text) != HLL_OK) {
    std::cerr << "error: " << hll_last_error() << "\n";
    return 1;
  }
  std::istringstream lines(text);
  hll_string_free(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::cout << "  " << line.substr(0, tab);
    for (std::size_t i = tab; i < 22; ++i) std::cout << ' ';
    std::cout << "  " << line.substr(tab + 1) << "\n";
  }
  return kExitOk;
}

// --set values parse as JSON when possible, otherwise as strings, so
// `--set Ns=[4,8,16]`, `--set p=2.5` and `--set field=real` all work
nlohmann::json parse_set_value(const std::string& text) {
  const nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
  if (!parsed.is_discarded()) return parsed;
  return nlohmann::json(text);
}

int run_json(const nlohmann::json& cfg, const std::string& out_override, bool have_seed,
             std::uint64_t seed) {
  int exit_code = 0;
  const std::string text = cfg.dump();
  const hll_status st = hll_run_config(text.c_str(), out_override.empty() ? nullptr : out_override.c_str(),
                                       seed, have_seed ? 1 : 0, &exit_code);
  if (st != HLL_OK) {
    std::cerr << "error: " << hll_last_error() << "\n";
    return kExitSchema;
  }
  if (exit_code != 0) std::cerr << "error: " << hll_last_error() << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for Hardy-Littlewood type inequalities"};
  app.set_version_flag("--version", std::string("hllab ") + hll_version());
  app.require_subcommand(1);

  CLI::App* list = app.add_subcommand("list", "list the available experiments");

  CLI::App* run = app.add_subcommand("run", "run an experiment from a config or by name");
  std::string config_path;
  std::string experiment;
  std::vector<std::string> sets;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool have_seed = false;
  run->add_option("config", config_path, "config JSON file");
  run->add_option("--experiment", experiment, "experiment name (instead of a config file)");
  run->add_option("--set", sets, "override a parameter, key=value (value parsed as JSON)");
  run->add_option("--out", out_dir, "output directory override");
  run->add_option("--seed", seed, "seed override")->each([&](const std::string&) { have_seed = true; });

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) return cmd_list();

  if (config_path.empty() == experiment.empty()) {
    std::cerr << "error: pass exactly one of <config.json> or --experiment\n";
    return kExitSchema;
  }

  nlohmann::json cfg;
  if (!config_path.empty()) {
    std::ifstream f(config_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot read '" << config_path << "'\n";
      return kExitIo;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    cfg = nlohmann::json::parse(buf.str(), nullptr, false);
    if (cfg.is_discarded()) {
      std::cerr << "error: '" << config_path << "' is not valid JSON\n";
      return kExitSchema;
    }
  } else {
    char* text = nullptr;
    if (hll_default_config(experiment.c_str(), &text) != HLL_OK) {
      std::cerr << "error: " << hll_last_error() << "\n";
      return kExitSchema;
    }
    cfg = nlohmann::json::parse(text);
    hll_string_free(text);
  }

  for (const std::string& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: --set expects key=value, got '" << kv << "'\n";
      return kExitSchema;
    }
    if (!cfg.is_object()) cfg = nlohmann::json::object();
    if (!cfg.contains("parameters") || !cfg["parameters"].is_object())
      cfg["parameters"] = nlohmann::json::object();
    cfg["parameters"][kv.substr(0, eq)] = parse_set_value(kv.substr(eq + 1));
  }

  return run_json(cfg, out_dir, have_seed, seed);
}
