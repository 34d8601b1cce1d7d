/*
 * Copyright 2026 The genseq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file config.hpp
 * JSON configuration documents: radical basis, ambient variables with their
 * values, ring substitutions, bounds and output options.
 */
#pragma once

#include <genseq/outputs.hpp>

#include <json.hpp>

namespace genseq {

struct ConfigDiagnostic {
  std::string where;  // "line 4, column 12" or a JSON pointer with its line
  std::string message;

  std::string to_string() const { return where.empty() ? message : where + ": " + message; }
};

/// Raised with every problem found in a configuration document.
class ConfigError : public UsageError {
 public:
  explicit ConfigError(std::vector<ConfigDiagnostic> diagnostics);
  const std::vector<ConfigDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<ConfigDiagnostic> diagnostics_;
};

struct AmbientSpec {
  std::string name;
  std::vector<Rational> value;  // coefficients over the basis
};

struct RingSpec {
  std::string name;
  std::string image;  // polynomial in the ambient variables
};

struct OutputOptions {
  std::vector<std::string> ideal_sigmas;
  std::string semigroup_cap = "2";
};

struct Config {
  std::vector<std::uint64_t> basis{1};
  std::vector<AmbientSpec> ambient;
  std::vector<RingSpec> ring;
  Bounds bounds;
  std::string value_slack;  // empty: 5 * beta_1
  std::int64_t redundancy_degree_cap = 40;
  OutputOptions output;
};

/// Parses a configuration document. Throws ConfigError listing every problem.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);

/// Canonical JSON form; parse_config(to_json(c).dump()) reproduces c.
nlohmann::ordered_json to_json(const Config& config);

bool operator==(const AmbientSpec& a, const AmbientSpec& b);
bool operator==(const RingSpec& a, const RingSpec& b);
bool operator==(const Config& a, const Config& b);

/// Builds and validates the valuation model. Throws ConfigError on any problem.
std::shared_ptr<const ValuationModel> build_model(const Config& config);

/// Redundancy caps resolved over the model basis.
RedundancyCaps redundancy_caps(const Config& config, const BasisPtr& basis);

/// Configuration of the worked example shipped with the tool.
std::string_view worked_example_config_text();

}  // namespace genseq
