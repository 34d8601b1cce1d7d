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
 * @file report.hpp
 * Full pipeline run for one configuration and its JSON / text reports.
 */
#pragma once

#include <genseq/config.hpp>

namespace genseq {

struct IdealResult {
  Value sigma;
  IdealGenerators generators;
};

struct PipelineResult {
  PipelineResult(Config cfg, std::shared_ptr<const ValuationModel> m);

  Config config;
  std::shared_ptr<const ValuationModel> model;
  JumpState state;
  RedundancyCaps caps;
  GeneratingSequence minimal;
  GeneratingSequence all;
  std::vector<GrRelation> relations;
  Value semigroup_cap;
  SemigroupValues semigroup;
  std::vector<IdealResult> ideals;
};

/// Builds the model, both chains and every derived output.
/// Throws ConfigError for configuration problems and ConsistencyError when the
/// construction detects a violated hypothesis.
std::unique_ptr<PipelineResult> run_pipeline(const Config& config);

nlohmann::ordered_json value_json(const Value& v);
nlohmann::ordered_json pair_json(const PairVec& v);

/// Machine-readable report. Deterministic: no timing, no host data.
nlohmann::ordered_json report_json(const PipelineResult& result);

/// Human-readable report.
std::string report_text(const PipelineResult& result);

}  // namespace genseq
