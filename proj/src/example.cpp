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

#include <genseq/example.hpp>

#include <map>
#include <set>

namespace genseq {

namespace {

using Json = nlohmann::json;

std::size_t t_number(const std::string& ref) {
  if (ref.size() < 2 || ref[0] != 'T') throw UsageError("golden key '" + ref + "' is not a T reference");
  return static_cast<std::size_t>(std::stoul(ref.substr(1)));
}

class Diff {
 public:
  void add(const std::string& field, const std::string& expected, const std::string& got) {
    out.push_back(field + ": expected " + expected + ", got " + got);
  }
  std::vector<std::string> out;
};

// Evaluates the golden definitions T_j = f(x, y, z, T_1, ..., T_{j-1}) in order,
// independently of the engine.
std::map<std::size_t, LaurentPoly> golden_polys(const Json& defs, const VarListPtr& ring,
                                                const std::vector<std::string>& ring_names, std::size_t count) {
  std::vector<std::string> names = ring_names;
  for (std::size_t j = 1; j <= count; ++j) names.push_back("T" + std::to_string(j));
  VarListPtr ext = make_vars(names);
  std::vector<LaurentPoly> images;
  for (std::size_t k = 0; k < 3; ++k) images.push_back(LaurentPoly::variable(ring, k));
  for (std::size_t j = 1; j <= count; ++j) images.push_back(LaurentPoly::constant(ring, 0));
  std::map<std::size_t, LaurentPoly> out;
  for (std::size_t j = 1; j <= count; ++j) {
    std::string key = "T" + std::to_string(j);
    if (!defs.contains(key)) continue;
    LaurentPoly g = substitute(parse_poly(defs[key].get<std::string>(), ext), images);
    images[2 + j] = g;
    out.emplace(j, g);
  }
  return out;
}

LaurentPoly eval_identity(const std::string& text, const std::map<std::size_t, LaurentPoly>& polys,
                          const VarListPtr& ring, const std::vector<std::string>& ring_names, std::size_t count) {
  std::vector<std::string> names = ring_names;
  for (std::size_t j = 1; j <= count; ++j) names.push_back("T" + std::to_string(j));
  VarListPtr ext = make_vars(names);
  std::vector<LaurentPoly> images;
  for (std::size_t k = 0; k < 3; ++k) images.push_back(LaurentPoly::variable(ring, k));
  for (std::size_t j = 1; j <= count; ++j) {
    auto it = polys.find(j);
    images.push_back(it == polys.end() ? LaurentPoly::constant(ring, 0) : it->second);
  }
  return substitute(parse_poly(text, ext), images);
}

}  // namespace

std::vector<std::string> compare_with_golden(const PipelineResult& run, const Json& golden) {
  Diff diff;
  const JumpState& st = run.state;
  const BasisPtr& basis = st.model().basis();
  const VarListPtr& ring = st.model().ring();
  const std::vector<std::string>& ring_names = ring->names();

  // P-chain.
  const Json& pg = golden.at("p_chain");
  if (pg.at("length").get<std::size_t>() != st.p_chain().size()) {
    diff.add("p_chain.length", std::to_string(pg.at("length").get<std::size_t>()), std::to_string(st.p_chain().size()));
  }
  if (pg.at("complete").get<bool>() != st.p_complete()) {
    diff.add("p_chain.complete", pg.at("complete").dump(), st.p_complete() ? "true" : "false");
  }
  const Json& betas = pg.at("beta");
  for (std::size_t k = 0; k < betas.size(); ++k) {
    std::string field = "P" + std::to_string(k + 1) + ".beta";
    Value expected = parse_value(betas[k].get<std::string>(), basis);
    if (k >= st.p_chain().size()) {
      diff.add(field, expected.to_string(), "missing");
    } else if (st.p_chain()[k].beta != expected) {
      diff.add(field, expected.to_string(), st.p_chain()[k].beta.to_string());
    }
  }

  // T-chain shape and values.
  const Json& tg = golden.at("t_chain");
  const std::size_t count = tg.at("count").get<std::size_t>();
  if (count != st.t_chain().size()) {
    diff.add("t_chain.count", std::to_string(count), std::to_string(st.t_chain().size()));
  }
  if (tg.at("processed").get<std::size_t>() != st.values().processed) {
    diff.add("t_chain.processed", tg.at("processed").dump(), std::to_string(st.values().processed));
  }
  auto engine_t = [&](std::size_t j) -> const TJump* { return j <= st.t_chain().size() ? &st.t(j) : nullptr; };
  for (const auto& [key, val] : tg.at("gamma").items()) {
    Value expected = parse_value(val.get<std::string>(), basis);
    const TJump* t = engine_t(t_number(key));
    if (!t) diff.add(key + ".gamma", expected.to_string(), "missing");
    else if (t->gamma != expected) diff.add(key + ".gamma", expected.to_string(), t->gamma.to_string());
  }
  for (const auto& [key, val] : tg.at("s").items()) {
    const TJump* t = engine_t(t_number(key));
    Multiplicity expected = val.is_null() ? Multiplicity{} : Multiplicity{val.get<std::int64_t>()};
    if (!t) diff.add(key + ".s", to_string(expected), "missing");
    else if (t->s != expected) diff.add(key + ".s", to_string(expected), to_string(t->s));
  }
  for (const auto& [key, val] : tg.at("m").items()) {
    const TJump* t = engine_t(t_number(key));
    if (!t) diff.add(key + ".m", val.dump(), "missing");
    else if (t->m != val.get<std::size_t>()) diff.add(key + ".m", val.dump(), std::to_string(t->m));
  }

  // Polynomials, from the golden definitions.
  auto gpolys = golden_polys(tg.at("definitions"), ring, ring_names, count);
  for (const auto& [j, g] : gpolys) {
    const TJump* t = engine_t(j);
    std::string key = "T" + std::to_string(j);
    if (!t) diff.add(key + ".poly", g.to_string(), "missing");
    else if (!(t->poly == g)) diff.add(key + ".poly", g.to_string(), t->poly.to_string());
  }
  if (tg.contains("expanded")) {
    for (const auto& [key, val] : tg.at("expanded").items()) {
      LaurentPoly expected = parse_poly(val.get<std::string>(), ring);
      const TJump* t = engine_t(t_number(key));
      if (!t) diff.add(key + ".expanded", expected.to_string(), "missing");
      else if (!(t->poly == expected)) diff.add(key + ".expanded", expected.to_string(), t->poly.to_string());
    }
  }

  // Pushing sets, compared as sets of concatenated vectors.
  for (const auto& [key, val] : golden.at("pushing_sets").items()) {
    const TJump* t = engine_t(t_number(key));
    std::set<std::vector<std::int64_t>> expected;
    for (const auto& v : val) expected.insert(v.get<std::vector<std::int64_t>>());
    auto render = [](const std::set<std::vector<std::int64_t>>& s) {
      std::string out = "{";
      for (const auto& v : s) {
        out += out.size() > 1 ? ", (" : "(";
        for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
        out += ")";
      }
      return out + "}";
    };
    if (!t || !t->processed) {
      diff.add(key + ".pushing_set", render(expected), "not computed");
      continue;
    }
    std::set<std::vector<std::int64_t>> got;
    for (const auto& d : t->pushing_set) got.insert(d.concat(t->m, t->index));
    if (got != expected) diff.add(key + ".pushing_set", render(expected), render(got));
  }

  // Redundancy: golden identities must hold for the golden polynomials, and
  // the engine must certify the same elements.
  const Json& rg = golden.at("redundancy");
  for (const auto& [key, val] : rg.at("identities").items()) {
    std::size_t j = t_number(key);
    auto it = gpolys.find(j);
    if (it == gpolys.end()) continue;
    LaurentPoly rhs = eval_identity(val.get<std::string>(), gpolys, ring, ring_names, count);
    if (!(rhs == it->second)) diff.add(key + ".identity", val.get<std::string>(), "a different polynomial");
  }
  std::map<std::string, CertificateStatus> status;
  for (const auto& c : run.minimal.certificates) status[c.target.to_string()] = c.status;
  auto status_of = [&](const std::string& ref) -> std::string {
    auto it = status.find(ref);
    if (it != status.end()) return to_string(it->second);
    for (const auto& d : run.minimal.dropped) {
      if (d.ref.to_string() == ref) return "dropped (" + d.reason + ")";
    }
    return "missing";
  };
  for (const auto& ref : rg.at("certified")) {
    std::string r = ref.get<std::string>();
    const TJump* t = engine_t(t_number(r));
    bool zero = t && t->kind == TKind::zero;
    std::string got = zero ? "certified" : status_of(r);
    if (got != "certified") diff.add(r + ".redundancy", "certified", got);
  }
  for (const auto& ref : rg.at("not_eligible")) {
    std::string r = ref.get<std::string>();
    std::string got = status_of(r);
    if (got != "not-eligible") diff.add(r + ".redundancy", "not-eligible", got);
  }

  // Minimal generating sequence.
  const Json& mg = golden.at("minimal_sequence");
  if (mg.at("certified").get<bool>() != run.minimal.certified) {
    diff.add("minimal_sequence.certified", mg.at("certified").dump(), run.minimal.certified ? "true" : "false");
  }
  const Json& elems = mg.at("elements");
  if (elems.size() != run.minimal.entries.size()) {
    diff.add("minimal_sequence.size", std::to_string(elems.size()), std::to_string(run.minimal.entries.size()));
  }
  for (std::size_t k = 0; k < elems.size(); ++k) {
    std::string ref = elems[k].at("ref").get<std::string>();
    std::string field = "minimal_sequence[" + std::to_string(k) + "] (" + ref + ")";
    LaurentPoly expected = parse_poly(elems[k].at("poly").get<std::string>(), ring);
    if (k >= run.minimal.entries.size()) {
      diff.add(field, expected.to_string(), "missing");
      continue;
    }
    const auto& e = run.minimal.entries[k];
    if (e.ref.to_string() != ref) diff.add(field + ".ref", ref, e.ref.to_string());
    if (!(e.poly == expected)) diff.add(field + ".poly", expected.to_string(), e.poly.to_string());
  }
  return diff.out;
}

}  // namespace genseq
