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

#include <genseq/config.hpp>

#include <cctype>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace genseq {

namespace {

std::string summary(const std::vector<ConfigDiagnostic>& diagnostics) {
  std::string out = "invalid configuration";
  for (const auto& d : diagnostics) out += "\n  " + d.to_string();
  return out;
}

std::string line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Maps each JSON pointer of an already well-formed document to the offset of
// its value, so that semantic diagnostics can name a line.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {
    skip();
    value("");
  }

  std::string where(const std::string& pointer) const {
    auto it = offsets_.find(pointer);
    if (it == offsets_.end()) return pointer.empty() ? "document" : pointer;
    return (pointer.empty() ? std::string("document") : pointer) + " (" + line_col(text_, it->second) + ")";
  }

  std::size_t offset(const std::string& pointer) const {
    auto it = offsets_.find(pointer);
    return it == offsets_.end() ? 0 : it->second;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string string_token() {
    std::string out;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;
    return out;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  void value(const std::string& pointer) {
    offsets_[pointer] = pos_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        std::string key = string_token();
        skip();
        ++pos_;  // ':'
        skip();
        value(pointer + "/" + escape(key));
        skip();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip();
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      skip();
      std::size_t index = 0;
      while (pos_ < text_.size() && text_[pos_] != ']') {
        value(pointer + "/" + std::to_string(index++));
        skip();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip();
      }
      ++pos_;
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && !std::strchr(",]} \t\r\n", text_[pos_])) ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> offsets_;
};

using Json = nlohmann::json;

class Reader {
 public:
  Reader(std::string_view text, const Locator& loc) : text_(text), loc_(loc) {}

  void error(const std::string& pointer, const std::string& message) {
    diags_.push_back({loc_.where(pointer), message});
  }

  // A problem inside a string value: report the absolute line/column.
  void error_in_string(const std::string& pointer, std::size_t position, const std::string& message) {
    std::size_t base = loc_.offset(pointer) + 1;  // skip the opening quote
    diags_.push_back({pointer + " (" + line_col(text_, base + position) + ")", message});
  }

  std::vector<ConfigDiagnostic>& diagnostics() { return diags_; }

  void check_keys(const Json& obj, const std::string& pointer, const std::set<std::string>& allowed) {
    for (const auto& [key, val] : obj.items()) {
      if (!allowed.count(key)) error(pointer + "/" + key, "unknown key '" + key + "'");
    }
  }

  std::optional<std::string> string_at(const Json& obj, const std::string& key, const std::string& pointer) {
    if (!obj.contains(key)) {
      error(pointer, "missing key '" + key + "'");
      return std::nullopt;
    }
    if (!obj[key].is_string()) {
      error(pointer + "/" + key, "expected a string");
      return std::nullopt;
    }
    return obj[key].get<std::string>();
  }

  template <class Int>
  void integer_at(const Json& obj, const std::string& key, const std::string& pointer, Int& out, std::int64_t min) {
    if (!obj.contains(key)) return;
    const Json& v = obj[key];
    if (!v.is_number_integer() || v.get<std::int64_t>() < min) {
      error(pointer + "/" + key, "expected an integer >= " + std::to_string(min));
      return;
    }
    out = static_cast<Int>(v.get<std::int64_t>());
  }

  // Checks that `text` parses as a Value over `basis` (when the basis is usable).
  void check_value(const std::string& text, const std::string& pointer, const BasisPtr& basis) {
    if (!basis) return;
    try {
      parse_value(text, basis);
    } catch (const ParseError& e) {
      error_in_string(pointer, e.position(), e.what());
    } catch (const UsageError& e) {
      error(pointer, e.what());
    }
  }

 private:
  std::string_view text_;
  const Locator& loc_;
  std::vector<ConfigDiagnostic> diags_;
};

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/' && c != '+') return std::nullopt;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigDiagnostic> diagnostics)
    : UsageError(summary(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Config parse_config(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::vector<ConfigDiagnostic>{{line_col(text, e.byte == 0 ? 0 : e.byte - 1), std::string("malformed JSON: ") + e.what()}});
  }
  Locator loc(text);
  Reader rd(text, loc);
  Config cfg;
  if (!doc.is_object()) throw ConfigError(std::vector<ConfigDiagnostic>{{"document", "expected a JSON object"}});
  rd.check_keys(doc, "", {"basis", "ambient", "ring", "bounds", "output"});

  BasisPtr basis;
  if (doc.contains("basis")) {
    const Json& b = doc["basis"];
    cfg.basis.clear();
    bool ok = b.is_array();
    if (ok) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (!b[k].is_number_unsigned()) {
          rd.error("/basis/" + std::to_string(k), "expected a positive integer");
          ok = false;
        } else {
          cfg.basis.push_back(b[k].get<std::uint64_t>());
        }
      }
    } else {
      rd.error("/basis", "expected an array of radicands");
    }
    if (ok) {
      try {
        basis = make_basis(cfg.basis);
      } catch (const UsageError& e) {
        rd.error("/basis", e.what());
      }
    }
  } else {
    basis = make_basis(cfg.basis);
  }

  if (!doc.contains("ambient") || !doc["ambient"].is_array() || doc["ambient"].empty()) {
    rd.error("/ambient", "expected a non-empty array of ambient variables");
  } else {
    const Json& arr = doc["ambient"];
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string ptr = "/ambient/" + std::to_string(k);
      if (!arr[k].is_object()) {
        rd.error(ptr, "expected an object with 'name' and 'value'");
        continue;
      }
      rd.check_keys(arr[k], ptr, {"name", "value"});
      AmbientSpec spec;
      if (auto n = rd.string_at(arr[k], "name", ptr)) spec.name = *n;
      if (!arr[k].contains("value")) {
        rd.error(ptr, "missing key 'value'");
      } else if (arr[k]["value"].is_string()) {
        std::string vt = arr[k]["value"].get<std::string>();
        if (basis) {
          try {
            spec.value = parse_value(vt, basis).coeffs();
          } catch (const ParseError& e) {
            rd.error_in_string(ptr + "/value", e.position(), e.what());
          } catch (const UsageError& e) {
            rd.error(ptr + "/value", e.what());
          }
        }
      } else if (arr[k]["value"].is_array()) {
        const Json& coeffs = arr[k]["value"];
        if (basis && coeffs.size() != basis->size()) {
          rd.error(ptr + "/value", "expected " + std::to_string(basis->size()) + " coefficients, one per radicand");
        }
        for (std::size_t r = 0; r < coeffs.size(); ++r) {
          std::string cp = ptr + "/value/" + std::to_string(r);
          std::optional<Rational> q;
          if (coeffs[r].is_string()) q = parse_rational(coeffs[r].get<std::string>());
          if (coeffs[r].is_number_integer()) q = Rational(coeffs[r].get<long>());
          if (!q) {
            rd.error(cp, "expected an exact rational such as \"-5\" or \"3/2\"");
          } else {
            spec.value.push_back(*q);
          }
        }
      } else {
        rd.error(ptr + "/value", "expected a value string or a coefficient array");
      }
      cfg.ambient.push_back(std::move(spec));
    }
  }

  if (!doc.contains("ring") || !doc["ring"].is_array() || doc["ring"].size() != 3) {
    rd.error("/ring", "expected an array of exactly three ring variables");
  } else {
    const Json& arr = doc["ring"];
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string ptr = "/ring/" + std::to_string(k);
      if (!arr[k].is_object()) {
        rd.error(ptr, "expected an object with 'name' and 'image'");
        continue;
      }
      rd.check_keys(arr[k], ptr, {"name", "image"});
      RingSpec spec;
      if (auto n = rd.string_at(arr[k], "name", ptr)) spec.name = *n;
      if (auto im = rd.string_at(arr[k], "image", ptr)) spec.image = *im;
      cfg.ring.push_back(std::move(spec));
    }
  }

  // Names and images, once the variable lists are known.
  std::set<std::string> seen;
  for (std::size_t k = 0; k < cfg.ambient.size(); ++k) {
    if (!seen.insert(cfg.ambient[k].name).second) {
      rd.error("/ambient/" + std::to_string(k) + "/name", "duplicate variable '" + cfg.ambient[k].name + "'");
    }
  }
  VarListPtr amb;
  try {
    std::vector<std::string> names;
    for (const auto& a : cfg.ambient) names.push_back(a.name);
    if (!names.empty() && seen.size() == names.size()) amb = make_vars(names);
  } catch (const UsageError& e) {
    rd.error("/ambient", e.what());
  }
  if (cfg.ring.size() == 3) {
    std::set<std::string> ring_names;
    for (std::size_t k = 0; k < 3; ++k) {
      if (!ring_names.insert(cfg.ring[k].name).second) {
        rd.error("/ring/" + std::to_string(k) + "/name", "duplicate variable '" + cfg.ring[k].name + "'");
      }
    }
    try {
      if (ring_names.size() == 3) make_vars({cfg.ring[0].name, cfg.ring[1].name, cfg.ring[2].name});
    } catch (const UsageError& e) {
      rd.error("/ring", e.what());
    }
    if (amb) {
      for (std::size_t k = 0; k < 3; ++k) {
        std::string ptr = "/ring/" + std::to_string(k) + "/image";
        try {
          parse_poly(cfg.ring[k].image, amb);
        } catch (const ParseError& e) {
          rd.error_in_string(ptr, e.position(), e.what());
        } catch (const UsageError& e) {
          rd.error(ptr, e.what());
        }
      }
    }
  }

  if (doc.contains("bounds")) {
    const Json& b = doc["bounds"];
    if (!b.is_object()) {
      rd.error("/bounds", "expected an object");
    } else {
      rd.check_keys(b, "/bounds",
                    {"max_p_len", "max_t_index", "max_value", "d_layer_cap", "d_coordinate_cap", "d_degree_cap",
                     "graver_max_elements", "value_slack", "degree_cap"});
      rd.integer_at(b, "max_p_len", "/bounds", cfg.bounds.max_p_len, 1);
      rd.integer_at(b, "max_t_index", "/bounds", cfg.bounds.max_t_index, 1);
      rd.integer_at(b, "d_layer_cap", "/bounds", cfg.bounds.pushing.layer_cap, 1);
      rd.integer_at(b, "d_coordinate_cap", "/bounds", cfg.bounds.pushing.coordinate_cap, 1);
      rd.integer_at(b, "d_degree_cap", "/bounds", cfg.bounds.pushing.degree_cap, 1);
      rd.integer_at(b, "graver_max_elements", "/bounds", cfg.bounds.pushing.graver_max_elements, 1);
      rd.integer_at(b, "degree_cap", "/bounds", cfg.redundancy_degree_cap, 0);
      if (b.contains("max_value")) {
        if (auto s = rd.string_at(b, "max_value", "/bounds")) {
          cfg.bounds.max_value = *s;
          rd.check_value(*s, "/bounds/max_value", basis);
        }
      }
      if (b.contains("value_slack")) {
        if (auto s = rd.string_at(b, "value_slack", "/bounds")) {
          cfg.value_slack = *s;
          rd.check_value(*s, "/bounds/value_slack", basis);
        }
      }
    }
  }

  if (doc.contains("output")) {
    const Json& o = doc["output"];
    if (!o.is_object()) {
      rd.error("/output", "expected an object");
    } else {
      rd.check_keys(o, "/output", {"ideal_sigmas", "semigroup_cap"});
      if (o.contains("ideal_sigmas")) {
        if (!o["ideal_sigmas"].is_array()) {
          rd.error("/output/ideal_sigmas", "expected an array of value strings");
        } else {
          for (std::size_t k = 0; k < o["ideal_sigmas"].size(); ++k) {
            std::string ptr = "/output/ideal_sigmas/" + std::to_string(k);
            if (!o["ideal_sigmas"][k].is_string()) {
              rd.error(ptr, "expected a string");
              continue;
            }
            cfg.output.ideal_sigmas.push_back(o["ideal_sigmas"][k].get<std::string>());
            rd.check_value(cfg.output.ideal_sigmas.back(), ptr, basis);
          }
        }
      }
      if (o.contains("semigroup_cap")) {
        if (auto s = rd.string_at(o, "semigroup_cap", "/output")) {
          cfg.output.semigroup_cap = *s;
          rd.check_value(*s, "/output/semigroup_cap", basis);
        }
      }
    }
  } else {
    rd.check_value(cfg.output.semigroup_cap, "/output/semigroup_cap", basis);
  }

  if (!rd.diagnostics().empty()) throw ConfigError(std::move(rd.diagnostics()));
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(std::vector<ConfigDiagnostic>{{path, "cannot read file"}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

nlohmann::ordered_json to_json(const Config& c) {
  nlohmann::ordered_json j;
  j["basis"] = c.basis;
  j["ambient"] = nlohmann::ordered_json::array();
  for (const auto& a : c.ambient) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& q : a.value) coeffs.push_back(q.get_str());
    j["ambient"].push_back({{"name", a.name}, {"value", coeffs}});
  }
  j["ring"] = nlohmann::ordered_json::array();
  for (const auto& r : c.ring) j["ring"].push_back({{"name", r.name}, {"image", r.image}});
  nlohmann::ordered_json b;
  b["max_p_len"] = c.bounds.max_p_len;
  b["max_t_index"] = c.bounds.max_t_index;
  b["max_value"] = c.bounds.max_value;
  b["d_layer_cap"] = c.bounds.pushing.layer_cap;
  b["d_coordinate_cap"] = c.bounds.pushing.coordinate_cap;
  b["d_degree_cap"] = c.bounds.pushing.degree_cap;
  b["graver_max_elements"] = c.bounds.pushing.graver_max_elements;
  if (!c.value_slack.empty()) b["value_slack"] = c.value_slack;
  b["degree_cap"] = c.redundancy_degree_cap;
  j["bounds"] = b;
  j["output"] = {{"ideal_sigmas", c.output.ideal_sigmas}, {"semigroup_cap", c.output.semigroup_cap}};
  return j;
}

bool operator==(const AmbientSpec& a, const AmbientSpec& b) { return a.name == b.name && a.value == b.value; }
bool operator==(const RingSpec& a, const RingSpec& b) { return a.name == b.name && a.image == b.image; }

bool operator==(const Config& a, const Config& b) {
  const auto& pa = a.bounds.pushing;
  const auto& pb = b.bounds.pushing;
  return a.basis == b.basis && a.ambient == b.ambient && a.ring == b.ring && a.bounds.max_p_len == b.bounds.max_p_len &&
         a.bounds.max_t_index == b.bounds.max_t_index && a.bounds.max_value == b.bounds.max_value &&
         pa.graver_max_elements == pb.graver_max_elements && pa.layer_cap == pb.layer_cap &&
         pa.coordinate_cap == pb.coordinate_cap && pa.degree_cap == pb.degree_cap && a.value_slack == b.value_slack &&
         a.redundancy_degree_cap == b.redundancy_degree_cap && a.output.ideal_sigmas == b.output.ideal_sigmas &&
         a.output.semigroup_cap == b.output.semigroup_cap;
}

std::shared_ptr<const ValuationModel> build_model(const Config& c) {
  std::vector<ConfigDiagnostic> diags;
  try {
    BasisPtr basis = make_basis(c.basis);
    std::vector<std::string> amb_names, ring_names;
    std::vector<Value> values;
    for (const auto& a : c.ambient) {
      amb_names.push_back(a.name);
      if (a.value.size() != basis->size()) throw UsageError("ambient value of " + a.name + " has the wrong length");
      values.emplace_back(basis, a.value);
    }
    for (const auto& r : c.ring) ring_names.push_back(r.name);
    VarListPtr amb = make_vars(amb_names);
    VarListPtr ring = make_vars(ring_names);
    std::vector<LaurentPoly> images;
    for (const auto& r : c.ring) images.push_back(parse_poly(r.image, amb));
    auto model = std::make_shared<ValuationModel>(basis, amb, values, ring, images);
    for (const auto& issue : model->validate()) diags.push_back({"model", issue});
    if (diags.empty()) return model;
  } catch (const ParseError& e) {
    diags.push_back({"ring", e.what()});
  } catch (const UsageError& e) {
    diags.push_back({"model", e.what()});
  } catch (const ConsistencyError& e) {
    diags.push_back({"model", e.what()});
  }
  throw ConfigError(std::move(diags));
}

RedundancyCaps redundancy_caps(const Config& config, const BasisPtr& basis) {
  RedundancyCaps caps;
  caps.degree_cap = config.redundancy_degree_cap;
  if (!config.value_slack.empty()) caps.value_slack = parse_value(config.value_slack, basis);
  return caps;
}

}  // namespace genseq
