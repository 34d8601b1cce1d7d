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

#include <genseq/outputs.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace genseq {

std::string to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::certified:
      return "certified";
    case CertificateStatus::undecided:
      return "undecided";
    case CertificateStatus::not_eligible:
      return "not-eligible";
  }
  return "unknown";
}

bool chain_exact_below(const JumpState& state, const Value& v) {
  if (!state.p_complete() || !state.pushing_complete()) return false;
  for (const auto& t : state.t_chain()) {
    if (!t.processed && t.kind == TKind::commensurable && v > t.gamma) return false;
  }
  return true;
}

namespace {

// Coordinates used by the ideal and semigroup enumerations: every P, then
// every nonzero T.
struct Coordinates {
  std::vector<ChainRef> refs;
  std::vector<Value> values;
};

Coordinates coordinates(const JumpState& state) {
  Coordinates c;
  for (const auto& p : state.p_chain()) {
    c.refs.push_back({'P', p.index});
    c.values.push_back(p.beta);
  }
  for (const auto& t : state.t_chain()) {
    if (t.kind == TKind::zero) continue;
    c.refs.push_back({'T', t.index});
    c.values.push_back(t.gamma);
  }
  return c;
}

PairVec to_pairvec(const std::vector<std::int64_t>& w, const Coordinates& c) {
  std::vector<std::int64_t> p, t;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    auto& side = c.refs[k].kind == 'P' ? p : t;
    if (side.size() < c.refs[k].index) side.resize(c.refs[k].index, 0);
    side[c.refs[k].index - 1] = w[k];
  }
  return PairVec(std::move(p), std::move(t));
}

}  // namespace

IdealGenerators ideal_generators(const JumpState& state, const Value& sigma) {
  IdealGenerators out;
  out.complete = chain_exact_below(state, sigma);
  if (sign(sigma) != Sign::positive) {
    out.members.push_back(PairVec());
    return out;
  }
  Coordinates c = coordinates(state);
  const std::size_t n = c.values.size();
  // Everything strictly below sigma; finite because every coordinate value is positive.
  std::set<std::vector<std::int64_t>> below;
  std::vector<std::int64_t> cur(n, 0);
  std::function<void(std::size_t, const Value&)> walk = [&](std::size_t k, const Value& acc) {
    if (k == n) {
      below.insert(cur);
      return;
    }
    Value v = acc;
    while (v < sigma) {
      walk(k + 1, v);
      ++cur[k];
      v += c.values[k];
    }
    cur[k] = 0;
  };
  walk(0, Value::zero(state.values().basis));

  std::set<std::vector<std::int64_t>> minimal;
  for (const auto& v : below) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::int64_t> w = v;
      ++w[k];
      if (below.count(w)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (w[j] == 0) continue;
        --w[j];
        ok = below.count(w) > 0;
        ++w[j];
      }
      if (ok) minimal.insert(w);
    }
  }
  std::vector<std::pair<Value, PairVec>> keyed;
  for (const auto& w : minimal) {
    PairVec pv = to_pairvec(w, c);
    keyed.emplace_back(value_of(pv, state.values()), pv);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return grlex_less(a.second, b.second);
  });
  for (auto& [val, pv] : keyed) out.members.push_back(std::move(pv));
  return out;
}

RedundancyCertificate redundancy_certificate(const JumpState& state, ChainRef target, const RedundancyCaps& caps) {
  const ChainValues& cv = state.values();
  RedundancyCertificate cert;
  cert.target = target;
  LaurentPoly residual = LaurentPoly::constant(state.model().ambient(), 0);
  std::optional<Value> target_value;
  PairVec unit;

  if (target.kind == 'P') {
    const PJump& p = state.p(target.index);
    std::vector<Value> below(cv.beta.begin(), cv.beta.begin() + static_cast<std::ptrdiff_t>(target.index - 1));
    if (below.empty() || !semigroup_contains(p.beta, below)) {
      cert.status = CertificateStatus::not_eligible;
      cert.note = "value not in the semigroup of the earlier P values";
      return cert;
    }
    residual = state.model().expand(p.poly);
    target_value = p.beta;
    unit = PairVec::p_unit(target.index);
  } else if (target.kind == 'T') {
    const TJump& t = state.t(target.index);
    if (t.kind == TKind::zero) {
      cert.status = CertificateStatus::certified;
      cert.note = "zero polynomial";
      return cert;
    }
    if (!semigroup_contains(t.gamma, chain_generators(cv, t.m, target.index - 1))) {
      cert.status = CertificateStatus::not_eligible;
      cert.note = "value not in S_m + U of the earlier elements";
      return cert;
    }
    residual = t.expansion;
    target_value = t.gamma;
    unit = PairVec::t_unit(target.index);
  } else {
    throw UsageError("target must be a P or a T");
  }

  Value slack = caps.value_slack ? *caps.value_slack : cv.beta.front().scaled(5);
  Value bound = *target_value + slack;
  while (!residual.is_zero()) {
    InitialTerm it = state.model().initial_term_ambient(residual);
    if (it.value > bound) {
      cert.status = CertificateStatus::undecided;
      cert.note = "residual value " + it.value.to_string() + " exceeds the value slack";
      cert.combo.clear();
      return cert;
    }
    PairVec xy;
    try {
      xy = irreducible_decompose(it.value, cv, cv.p_count(), cv.processed);
    } catch (const UsageError&) {
      cert.status = CertificateStatus::undecided;
      cert.note = "value " + it.value.to_string() + " has no representation over the processed chain";
      cert.combo.clear();
      return cert;
    }
    if (xy == unit) {
      cert.status = CertificateStatus::undecided;
      cert.note = "the target is irreducible over the processed chain";
      cert.combo.clear();
      return cert;
    }
    if (state.monomial_degree(xy) > caps.degree_cap) {
      cert.status = CertificateStatus::undecided;
      cert.note = "term " + xy.to_string() + " exceeds the degree cap";
      cert.combo.clear();
      return cert;
    }
    InitialTerm mi = state.monomial_initial(xy);
    if (mi.monomial != it.monomial) throw ConsistencyError("initial monomials disagree for " + xy.to_string());
    Rational c = it.coeff / mi.coeff;
    residual = residual - state.monomial_expansion(xy).scaled(c);
    cert.combo.push_back({c, xy, it.value});
  }
  cert.status = CertificateStatus::certified;
  if (!verify_certificate(state, cert)) throw ConsistencyError("certificate for " + target.to_string() + " fails");
  return cert;
}

bool verify_certificate(const JumpState& state, const RedundancyCertificate& cert) {
  if (cert.status != CertificateStatus::certified) return false;
  const LaurentPoly& target = cert.target.kind == 'P' ? state.p(cert.target.index).poly : state.t(cert.target.index).poly;
  LaurentPoly sum = LaurentPoly::constant(state.model().ring(), 0);
  for (const auto& term : cert.combo) sum = sum + state.monomial_poly(term.monomial).scaled(term.coeff);
  return sum == target;
}

GeneratingSequence generating_sequence(const JumpState& state, bool minimal, const RedundancyCaps& caps) {
  GeneratingSequence out;
  out.minimal_requested = minimal;
  std::vector<SequenceEntry> all;
  for (const auto& p : state.p_chain()) all.push_back({{'P', p.index}, p.poly, p.beta});
  for (const auto& t : state.t_chain()) {
    if (t.kind != TKind::zero) all.push_back({{'T', t.index}, t.poly, t.gamma});
  }
  if (!minimal) {
    out.entries = std::move(all);
    out.note = "all constructed nonzero elements";
    return out;
  }

  const bool searches_complete = state.pushing_complete();
  std::set<std::size_t> dropped_t;
  for (const auto& p : state.p_chain()) {
    auto cert = redundancy_certificate(state, {'P', p.index}, caps);
    if (cert.status == CertificateStatus::certified) {
      out.dropped.push_back({{'P', p.index}, "certificate", !searches_complete});
    } else {
      out.entries.push_back({{'P', p.index}, p.poly, p.beta});
    }
    out.certificates.push_back(std::move(cert));
  }
  for (const auto& t : state.t_chain()) {
    ChainRef ref{'T', t.index};
    if (t.kind == TKind::zero) {
      out.dropped.push_back({ref, "zero", false});
      dropped_t.insert(t.index);
      continue;
    }
    auto cert = redundancy_certificate(state, ref, caps);
    if (cert.status == CertificateStatus::certified) {
      out.dropped.push_back({ref, "certificate", !searches_complete});
      dropped_t.insert(t.index);
    } else if (t.parent && dropped_t.count(t.parent->step) && !state.t(t.parent->step).poly.is_zero()) {
      // Every successor of a redundant element is redundant.
      out.dropped.push_back({ref, "successor of T" + std::to_string(t.parent->step), true});
      dropped_t.insert(t.index);
    } else {
      out.entries.push_back({ref, t.poly, t.gamma});
    }
    out.certificates.push_back(std::move(cert));
  }

  std::vector<std::string> gaps;
  if (!state.p_complete()) gaps.push_back("P-chain truncated");
  if (!searches_complete) gaps.push_back("a pushing set search was bounded");
  for (const auto& t : state.t_chain()) {
    if (!t.processed && !dropped_t.count(t.index)) {
      gaps.push_back("T" + std::to_string(t.index) + " is unprocessed and kept");
    }
  }
  std::vector<Value> kept;
  for (const auto& e : out.entries) kept.push_back(e.value);
  if (minimal_semigroup_generators(kept).size() != kept.size()) {
    gaps.push_back("kept values do not minimally generate their semigroup");
  }
  out.certified = gaps.empty();
  if (out.certified) {
    out.note = "kept values minimally generate the value semigroup; every other element is redundant";
  } else {
    for (const auto& g : gaps) out.note += (out.note.empty() ? "" : "; ") + g;
  }
  return out;
}

std::vector<GrRelation> gr_presentation(const JumpState& state) {
  std::vector<GrRelation> out;
  const ChainValues& cv = state.values();
  for (const auto& p : state.p_chain()) {
    if (!p.q || !p.lambda) continue;
    GrRelation r{{'P', p.index + 1}, PairVec::p_unit(p.index, *p.q), PairVec(p.relation, {}), *p.lambda};
    out.push_back(std::move(r));
  }
  for (const auto& t : state.t_chain()) {
    if (!t.parent) continue;
    out.push_back({{'T', t.index}, t.parent->pushing, t.parent->replacement, t.parent->mu});
  }
  for (const auto& r : out) {
    if (value_of(r.lhs, cv) != value_of(r.rhs, cv) || sgn(r.scalar) == 0) {
      throw ConsistencyError("relation for " + r.source.to_string() + " is not homogeneous");
    }
  }
  return out;
}

SemigroupValues semigroup_values_up_to(const JumpState& state, const Value& cap) {
  SemigroupValues out;
  out.complete = chain_exact_below(state, cap);
  if (sign(cap) == Sign::negative) return out;
  std::vector<Value> gens = chain_generators(state.values(), state.values().p_count(), state.values().t_count());
  std::set<Value, ValueLess> seen;
  std::function<void(std::size_t, const Value&)> walk = [&](std::size_t k, const Value& acc) {
    seen.insert(acc);
    for (std::size_t j = k; j < gens.size(); ++j) {
      Value next = acc + gens[j];
      if (next <= cap) walk(j, next);
    }
  };
  walk(0, Value::zero(state.values().basis));
  out.values.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace genseq
