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
 * @file example.hpp
 * The shipped worked example (x, y, z' with values 1, sqrt(2), sqrt(51)-5)
 * and the comparison of a run against its golden data.
 */
#pragma once

#include <genseq/report.hpp>

namespace genseq {

/// Golden data for the worked example, as shipped in the binary.
std::string_view worked_example_golden_text();

/// Field-level differences between a pipeline run and golden data; empty when they agree.
/// Golden polynomials are evaluated from their own definitions, never from the run.
std::vector<std::string> compare_with_golden(const PipelineResult& run, const nlohmann::json& golden);

}  // namespace genseq
