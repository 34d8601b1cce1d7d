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

#include "support.hpp"

#include <doctest.h>

using namespace genseq;
using namespace genseq::testing;

namespace {

std::vector<ConfigDiagnostic> diagnostics_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.diagnostics();
  }
  return {};
}

bool mentions(const std::vector<ConfigDiagnostic>& ds, const std::string& where, const std::string& what) {
  for (const auto& d : ds) {
    if (d.where.find(where) != std::string::npos && d.message.find(what) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("the shipped worked example parses") {
  Config cfg = parse_config(worked_example_config_text());
  CHECK(cfg.basis == std::vector<std::uint64_t>{1, 2, 51});
  REQUIRE(cfg.ambient.size() == 3);
  CHECK(cfg.ambient[2].name == "z'");
  CHECK(cfg.ambient[2].value == std::vector<Rational>{Rational(-5), Rational(0), Rational(1)});
  CHECK(cfg.ring[2].image == "y^2/x + y^5/x^5 + z'");
  CHECK(cfg.bounds.max_t_index == 16);
  CHECK(cfg.bounds.max_value == "40");
  CHECK(cfg.output.ideal_sigmas == std::vector<std::string>{"1", "2*sqrt(2)"});
}

TEST_CASE("canonical JSON round-trips") {
  Config cfg = parse_config(worked_example_config_text());
  std::string once = to_json(cfg).dump(2);
  Config again = parse_config(once);
  CHECK(again == cfg);
  CHECK(to_json(again).dump(2) == once);
  // defaults survive as well
  Config minimal = parse_config(R"js({"basis": [1, 2], "ambient": [{"name": "a", "value": "1"},
    {"name": "b", "value": "sqrt(2)"}, {"name": "c", "value": [0, "3/2"]}],
    "ring": [{"name": "x", "image": "a"}, {"name": "y", "image": "b"}, {"name": "z", "image": "c"}]})js");
  CHECK(minimal.ambient[2].value == std::vector<Rational>{Rational(0), Rational(3, 2)});
  CHECK(parse_config(to_json(minimal).dump()) == minimal);
}

TEST_CASE("syntax errors report line and column") {
  auto ds = diagnostics_of("{\n  \"basis\": [1, 2,\n}\n");
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].where.find("line 3") != std::string::npos);
}

TEST_CASE("every problem is reported with its location") {
  std::string text = R"js({
  "basis": [1, 4],
  "ambient": [
    {"name": "x", "value": "1"},
    {"name": "x", "value": "sqrt(2)"}
  ],
  "ring": [
    {"name": "x", "image": "x +* y"}, {"name": "y", "image": "y"}, {"name": "z", "image": "y"}
  ],
  "bounds": {"max_t_index": "many", "max_valu": "3"}
})js";
  auto ds = diagnostics_of(text);
  CHECK(ds.size() >= 4);
  CHECK(mentions(ds, "line 2", "squarefree"));
  CHECK(mentions(ds, "line 5", "duplicate"));
  CHECK(mentions(ds, "line 10", "max_valu"));
  CHECK(mentions(ds, "line 10", "integer"));
}

TEST_CASE("polynomial errors point inside the string") {
  std::string text = R"js({"basis": [1, 2],
 "ambient": [{"name": "a", "value": "1"}, {"name": "b", "value": "sqrt(2)"}, {"name": "c", "value": "3"}],
 "ring": [{"name": "x", "image": "a"}, {"name": "y", "image": "b"}, {"name": "z", "image": "c + * a"}]})js";
  auto ds = diagnostics_of(text);
  REQUIRE(!ds.empty());
  // the '*' sits in column 97 of line 3
  CHECK(mentions(ds, "line 3, column 97", "unexpected"));
}

TEST_CASE("model problems surface as configuration errors") {
  std::string text = R"js({"basis": [1, 2],
 "ambient": [{"name": "a", "value": "1"}, {"name": "b", "value": "sqrt(2)"}, {"name": "c", "value": "1 + sqrt(2)"}],
 "ring": [{"name": "x", "image": "a"}, {"name": "y", "image": "b"}, {"name": "z", "image": "c"}]})js";
  Config cfg = parse_config(text);
  CHECK_THROWS_AS(build_model(cfg), ConfigError);
}

TEST_CASE("redundancy caps") {
  Config cfg = parse_config(worked_example_config_text());
  auto model = build_model(cfg);
  RedundancyCaps caps = redundancy_caps(cfg, model->basis());
  CHECK(caps.degree_cap == 40);
  CHECK_FALSE(caps.value_slack.has_value());
  cfg.value_slack = "2*sqrt(2)";
  caps = redundancy_caps(cfg, model->basis());
  REQUIRE(caps.value_slack.has_value());
  CHECK(*caps.value_slack == parse_value("2*sqrt(2)", model->basis()));
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(load_config("/nonexistent/genseq.json"), UsageError);
}
