// Copyright 2026 The privlab Authors
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


#ifndef PRIVLAB_CLI_CONFIG_HPP
#define PRIVLAB_CLI_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "privlab/css.hpp"
#include "privlab/qudit.hpp"
#include "privlab/rng.hpp"
#include "privlab/tensor.hpp"

namespace privlab::cli {

using Json = nlohmann::ordered_json;

// Exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Csv };

struct ExperimentConfig {
  std::string command;
  std::uint64_t seed = 0;
  Json params = Json::object();  // command-specific keys, validated
  Json tolerances = Json::object();
  std::string out_path;  // empty: stdout
  OutputFormat format = OutputFormat::Json;

  // Canonical document; parse_config(to_json()) reproduces the config.
  Json to_json() const;
};

const std::vector<std::string>& command_names();

// Validates a config document. Unknown keys, wrong types and bad values
// raise ConfigError.
ExperimentConfig parse_config(const Json& doc);

// Reads and parses a JSON file. Missing or unreadable files raise IoError,
// malformed JSON raises ConfigError.
Json load_json_file(const std::string& path);

// Builds the config from argv. Returns nullopt after printing help.
std::optional<ExperimentConfig> config_from_args(int argc, const char* const* argv);

double tolerance(const ExperimentConfig& cfg, const std::string& name, double fallback);

// State specs: "bell", "werner:p", "mixed", "eq1:shield_dim", "appd:s", an
// inline object {"dims", "labels", "matrix" | "vector"} or "@file".
struct BuiltState {
  DensityOperator rho;
  std::optional<TwistingOperator> twisting;  // eq1 only
  std::string name;
};
BuiltState build_state(const Json& spec, int d, double noise, Rng& rng);

// Code specs: "trivial", {"d", "n", "mz", "mx"[, "logical_z", "logical_x"]}
// or {"sample": {"m_z", "m_x"}} with d and n taken from the surrounding keys.
CssCode build_code(const Json& spec, int d, int n, Rng& rng);

// Complex matrices as rows of [re, im] pairs.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

}  // namespace privlab::cli

#endif  // PRIVLAB_CLI_CONFIG_HPP
