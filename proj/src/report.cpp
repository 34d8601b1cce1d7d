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

#include <genseq/report.hpp>

#include <sstream>

namespace genseq {

using OJson = nlohmann::ordered_json;

PipelineResult::PipelineResult(Config cfg, std::shared_ptr<const ValuationModel> m)
    : config(std::move(cfg)),
      model(std::move(m)),
      state(model, config.bounds),
      caps(redundancy_caps(config, model->basis())),
      semigroup_cap(parse_value(config.output.semigroup_cap, model->basis())) {}

std::unique_ptr<PipelineResult> run_pipeline(const Config& config) {
  auto r = std::make_unique<PipelineResult>(config, build_model(config));
  r->state.build_p_chain();
  r->state.build_t_chain();
  r->minimal = generating_sequence(r->state, true, r->caps);
  r->all = generating_sequence(r->state, false, r->caps);
  r->relations = gr_presentation(r->state);
  r->semigroup = semigroup_values_up_to(r->state, r->semigroup_cap);
  for (const auto& s : config.output.ideal_sigmas) {
    Value sigma = parse_value(s, r->model->basis());
    r->ideals.push_back({sigma, ideal_generators(r->state, sigma)});
  }
  return r;
}

OJson value_json(const Value& v) {
  OJson coeffs = OJson::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(c.get_str());
  return {{"text", v.to_string()}, {"coeffs", coeffs}, {"approx", v.decimal()}};
}

OJson pair_json(const PairVec& v) { return {{"p", v.p()}, {"t", v.t()}}; }

namespace {

OJson multiplicity_json(const Multiplicity& m) { return m ? OJson(*m) : OJson(nullptr); }

// P1, P2 and T1 are the ring variables themselves; everything else keeps its chain name.
std::string factor_name(const JumpState& st, char kind, std::size_t index) {
  const auto& names = st.model().ring()->names();
  if (kind == 'P' && index <= 2) return names[index - 1];
  if (kind == 'T' && index == 1) return names[2];
  return std::string(1, kind) + std::to_string(index);
}

std::string monomial_text(const JumpState& st, const PairVec& v) {
  std::string out;
  auto add = [&](char kind, std::size_t index, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += factor_name(st, kind, index);
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (std::size_t k = 1; k <= v.p().size(); ++k) add('P', k, v.p_at(k));
  for (std::size_t j = 1; j <= v.t().size(); ++j) add('T', j, v.t_at(j));
  return out.empty() ? "1" : out;
}

OJson monomial_json(const JumpState& st, const PairVec& v) {
  OJson j = pair_json(v);
  j["monomial"] = monomial_text(st, v);
  j["value"] = value_json(value_of(v, st.values()));
  return j;
}

std::string combo_text(const JumpState& st, const std::vector<CertificateTerm>& combo) {
  if (combo.empty()) return "0";
  std::string out;
  for (const auto& t : combo) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (c != 1) out += c.get_str() + "*";
    out += monomial_text(st, t.monomial);
  }
  return out;
}

OJson certificate_json(const JumpState& st, const RedundancyCertificate& c) {
  OJson j;
  j["target"] = c.target.to_string();
  j["status"] = to_string(c.status);
  OJson combo = OJson::array();
  for (const auto& t : c.combo) {
    OJson term = monomial_json(st, t.monomial);
    term["coeff"] = t.coeff.get_str();
    combo.push_back(std::move(term));
  }
  j["combo"] = combo;
  j["identity"] = c.status == CertificateStatus::certified ? combo_text(st, c.combo) : "";
  j["note"] = c.note;
  return j;
}

OJson sequence_json(const GeneratingSequence& gs) {
  OJson j;
  j["minimal"] = gs.minimal_requested;
  OJson entries = OJson::array();
  for (const auto& e : gs.entries) {
    entries.push_back({{"ref", e.ref.to_string()}, {"poly", e.poly.to_string()}, {"value", value_json(e.value)}});
  }
  j["entries"] = entries;
  OJson dropped = OJson::array();
  for (const auto& d : gs.dropped) {
    dropped.push_back({{"ref", d.ref.to_string()}, {"reason", d.reason}, {"bounded", d.bounded}});
  }
  j["dropped"] = dropped;
  j["certified"] = gs.certified;
  j["note"] = gs.note;
  return j;
}

}  // namespace

OJson report_json(const PipelineResult& r) {
  const JumpState& st = r.state;
  OJson j;
  j["format"] = "genseq-report/1";
  j["config"] = to_json(r.config);

  OJson pc = OJson::array();
  for (const auto& p : st.p_chain()) {
    OJson e;
    e["index"] = p.index;
    e["poly"] = p.poly.to_string();
    e["beta"] = value_json(p.beta);
    e["q"] = multiplicity_json(p.q);
    e["relation"] = p.q ? OJson(p.relation) : OJson(nullptr);
    e["lambda"] = p.lambda ? OJson(p.lambda->get_str()) : OJson(nullptr);
    pc.push_back(std::move(e));
  }
  j["p_chain"] = {{"complete", st.p_complete()}, {"elements", pc}};

  OJson tc = OJson::array();
  for (const auto& t : st.t_chain()) {
    OJson e;
    e["index"] = t.index;
    e["poly"] = t.poly.to_string();
    e["kind"] = to_string(t.kind);
    e["gamma"] = value_json(t.gamma);
    e["s"] = multiplicity_json(t.s);
    e["m"] = t.m;
    if (t.parent) {
      e["parent"] = {{"step", t.parent->step},
                     {"pushing", monomial_json(st, t.parent->pushing)},
                     {"replacement", monomial_json(st, t.parent->replacement)},
                     {"mu", t.parent->mu.get_str()}};
    } else {
      e["parent"] = nullptr;
    }
    e["processed"] = t.processed;
    if (t.processed) {
      OJson ps = OJson::array();
      for (const auto& d : t.pushing_set) {
        OJson dj = monomial_json(st, d);
        dj["vector"] = d.concat(t.m, t.index);
        ps.push_back(std::move(dj));
      }
      e["pushing_set"] = ps;
      e["pushing_complete"] = t.pushing_complete;
      e["pushing_method"] = t.pushing_method.empty() ? OJson(nullptr) : OJson(t.pushing_method);
      e["successors"] = t.successors;
    } else {
      e["pushing_set"] = nullptr;
      e["pushing_complete"] = nullptr;
      e["pushing_method"] = nullptr;
      e["successors"] = nullptr;
    }
    tc.push_back(std::move(e));
  }
  j["t_chain"] = {{"stop_reason", to_string(st.stop_reason())},
                  {"truncated", st.t_truncated()},
                  {"processed", st.values().processed},
                  {"elements", tc}};

  OJson red = OJson::array();
  for (const auto& c : r.minimal.certificates) red.push_back(certificate_json(st, c));
  j["redundancy"] = red;
  j["generating_sequence"] = {{"minimal", sequence_json(r.minimal)}, {"all", sequence_json(r.all)}};

  OJson rel = OJson::array();
  for (const auto& g : r.relations) {
    rel.push_back({{"source", g.source.to_string()},
                   {"lhs", monomial_json(st, g.lhs)},
                   {"rhs", monomial_json(st, g.rhs)},
                   {"scalar", g.scalar.get_str()}});
  }
  j["gr_relations"] = rel;

  OJson sv = OJson::array();
  for (const auto& v : r.semigroup.values) sv.push_back(value_json(v));
  j["semigroup"] = {{"cap", value_json(r.semigroup_cap)}, {"complete", r.semigroup.complete}, {"values", sv}};

  OJson ideals = OJson::array();
  for (const auto& id : r.ideals) {
    OJson gens = OJson::array();
    for (const auto& g : id.generators.members) gens.push_back(monomial_json(st, g));
    ideals.push_back({{"sigma", value_json(id.sigma)}, {"complete", id.generators.complete}, {"generators", gens}});
  }
  j["ideals"] = ideals;

  j["completeness"] = {{"p_chain_complete", st.p_complete()},
                       {"pushing_sets_complete", st.pushing_complete()},
                       {"t_chain_truncated", st.t_truncated()},
                       {"minimality_certified", r.minimal.certified}};
  return j;
}

std::string report_text(const PipelineResult& r) {
  const JumpState& st = r.state;
  std::ostringstream out;
  out << "genseq report\n\n";
  out << "basis:";
  for (auto b : r.config.basis) out << " " << b;
  out << "\nambient values:\n";
  for (std::size_t k = 0; k < r.config.ambient.size(); ++k) {
    out << "  nu(" << r.config.ambient[k].name << ") = " << st.model().ambient_values()[k].to_string() << "\n";
  }
  out << "ring substitutions:\n";
  for (const auto& g : r.config.ring) out << "  " << g.name << " = " << g.image << "\n";

  out << "\nP-chain (" << (st.p_complete() ? "complete" : "truncated") << ")\n";
  for (const auto& p : st.p_chain()) {
    out << "  P" << p.index << " = " << p.poly.to_string() << "\n";
    out << "     beta = " << p.beta.to_string() << "  q = " << to_string(p.q);
    if (p.lambda) {
      out << "  L = (";
      for (std::size_t k = 0; k < p.relation.size(); ++k) out << (k ? "," : "") << p.relation[k];
      out << ")  lambda = " << p.lambda->get_str();
    }
    out << "\n";
  }

  out << "\nT-chain (stop: " << to_string(st.stop_reason()) << ", processed " << st.values().processed << " of "
      << st.t_chain().size() << ")\n";
  for (const auto& t : st.t_chain()) {
    out << "  T" << t.index << " = " << t.poly.to_string() << "\n";
    out << "     " << to_string(t.kind) << "  gamma = " << t.gamma.to_string() << "  s = " << to_string(t.s)
        << "  m = " << t.m;
    if (t.parent) {
      out << "  from T" << t.parent->step << ": " << monomial_text(st, t.parent->pushing) << " - ("
          << t.parent->mu.get_str() << ")*" << monomial_text(st, t.parent->replacement);
    }
    out << "\n";
    if (t.processed && t.kind == TKind::commensurable) {
      out << "     D = {";
      for (std::size_t k = 0; k < t.pushing_set.size(); ++k) {
        out << (k ? ", " : "") << t.pushing_set[k].to_string(t.m, t.index);
      }
      out << "}  [" << t.pushing_method << (t.pushing_complete ? ", complete" : ", INCOMPLETE") << "]\n";
    }
  }

  out << "\nRedundancy\n";
  for (const auto& c : r.minimal.certificates) {
    out << "  " << c.target.to_string() << ": " << to_string(c.status);
    if (c.status == CertificateStatus::certified) {
      out << "  " << c.target.to_string() << " = " << combo_text(st, c.combo);
    } else if (!c.note.empty()) {
      out << "  (" << c.note << ")";
    }
    out << "\n";
  }

  out << "\nMinimal generating sequence (" << (r.minimal.certified ? "certified" : "not certified") << ")\n";
  for (const auto& e : r.minimal.entries) out << "  " << e.ref.to_string() << " = " << e.poly.to_string() << "\n";
  out << "  note: " << r.minimal.note << "\n";
  for (const auto& d : r.minimal.dropped) {
    out << "  dropped " << d.ref.to_string() << ": " << d.reason << (d.bounded ? " (bounded)" : "") << "\n";
  }

  out << "\nGraded relations\n";
  if (r.relations.empty()) out << "  none\n";
  for (const auto& g : r.relations) {
    out << "  [" << g.source.to_string() << "] " << monomial_text(st, g.lhs) << " = " << g.scalar.get_str() << " * "
        << monomial_text(st, g.rhs) << "\n";
  }

  out << "\nSemigroup values <= " << r.semigroup_cap.to_string() << " ("
      << (r.semigroup.complete ? "complete" : "may be incomplete") << ")\n ";
  for (const auto& v : r.semigroup.values) out << " " << v.to_string() << ";";
  out << "\n";

  for (const auto& id : r.ideals) {
    out << "\nIdeal generators for sigma = " << id.sigma.to_string() << " ("
        << (id.generators.complete ? "complete" : "may be incomplete") << ")\n";
    for (const auto& g : id.generators.members) {
      out << "  " << monomial_text(st, g) << "  [" << value_of(g, st.values()).to_string() << "]\n";
    }
  }
  return out.str();
}

}  // namespace genseq
