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

// Shared fixtures and brute-force oracles for the unit and acceptance tests.
// The oracles only use exact Value arithmetic and plain enumeration; none of
// them calls the lattice, Graver or semigroup machinery under test.

#pragma once

#include <genseq/example.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace genseq::testing {

inline std::string joined(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

inline std::shared_ptr<const ValuationModel> worked_model() {
  static auto model = build_model(parse_config(worked_example_config_text()));
  return model;
}

/// The worked example built with its shipped bounds (16 indices, values up to 40).
inline const JumpState& worked_state() {
  static const JumpState state = [] {
    Config cfg = parse_config(worked_example_config_text());
    JumpState st(worked_model(), cfg.bounds);
    st.build_p_chain();
    st.build_t_chain();
    return st;
  }();
  return state;
}

/// x = u1, y = u1 + u2, z = u3 with values 1, sqrt(2), sqrt(3).
inline std::shared_ptr<const ValuationModel> second_model() {
  auto basis = make_basis({1, 2, 3});
  auto amb = make_vars({"u1", "u2", "u3"});
  auto ring = make_vars({"x", "y", "z"});
  std::vector<Value> vals{parse_value("1", basis), parse_value("sqrt(2)", basis), parse_value("sqrt(3)", basis)};
  std::vector<LaurentPoly> imgs{parse_poly("u1", amb), parse_poly("u1 + u2", amb), parse_poly("u3", amb)};
  return std::make_shared<ValuationModel>(basis, amb, vals, ring, imgs);
}

inline Value val(const JumpState& st, std::string_view text) { return parse_value(text, st.values().basis); }

inline LaurentPoly ring_poly(const JumpState& st, std::string_view text) { return parse_poly(text, st.model().ring()); }

/// Canonical key of a value, for hashing exact values.
inline std::vector<Rational> key(const Value& v) { return v.coeffs(); }

/// Every exponent vector over `gens` with total value <= cap (gens must be positive).
inline void enumerate_below(const std::vector<Value>& gens, const Value& cap,
                            const std::function<void(const std::vector<std::int64_t>&, const Value&)>& visit,
                            bool strict = false) {
  std::vector<std::int64_t> cur(gens.size(), 0);
  std::function<void(std::size_t, const Value&)> rec = [&](std::size_t k, const Value& acc) {
    if (k == gens.size()) {
      visit(cur, acc);
      return;
    }
    Value v = acc;
    while (strict ? v < cap : v <= cap) {
      rec(k + 1, v);
      ++cur[k];
      v += gens[k];
    }
    cur[k] = 0;
  };
  if (strict ? Value::zero(cap.basis()) < cap : Value::zero(cap.basis()) <= cap) rec(0, Value::zero(cap.basis()));
}

/// All semigroup elements generated by `gens` up to `cap`, as canonical keys.
inline std::set<std::vector<Rational>> semigroup_upto(const std::vector<Value>& gens, const Value& cap) {
  std::set<std::vector<Rational>> out;
  enumerate_below(gens, cap, [&](const std::vector<std::int64_t>&, const Value& v) { out.insert(key(v)); });
  return out;
}

/// Coordinates of the processed part of the chain: all P's and nonzero T_j with j <= limit.
struct Coords {
  std::vector<bool> is_p;
  std::vector<std::size_t> index;
  std::vector<Value> values;

  PairVec to_pair(const std::vector<std::int64_t>& w) const {
    std::vector<std::int64_t> p, t;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!w[k]) continue;
      auto& side = is_p[k] ? p : t;
      if (side.size() < index[k]) side.resize(index[k], 0);
      side[index[k] - 1] = w[k];
    }
    return PairVec(p, t);
  }
};

inline Coords coords_upto(const JumpState& st, std::size_t t_limit, std::size_t p_limit = SIZE_MAX) {
  Coords c;
  for (const auto& p : st.p_chain()) {
    if (p.index > p_limit) break;
    c.is_p.push_back(true);
    c.index.push_back(p.index);
    c.values.push_back(p.beta);
  }
  for (const auto& t : st.t_chain()) {
    if (t.index > t_limit) break;
    if (t.kind == TKind::zero) continue;
    c.is_p.push_back(false);
    c.index.push_back(t.index);
    c.values.push_back(t.gamma);
  }
  return c;
}

/// Pushing-set oracle: minimal elements of
///   { v over P_1..P_{m_i}, T_1..T_i : c_i > 0, value(v) <= cap, irreducible before stage i,
///     value(v) in the semigroup of beta_1..beta_{m_i}, gamma_1..gamma_{i-1} }
/// by plain enumeration and pairwise comparison.
inline std::set<PairVec> pushing_oracle(const JumpState& st, std::size_t i, const Value& cap) {
  const TJump& ti = st.t(i);
  Coords c = coords_upto(st, i, ti.m);
  std::vector<Value> gens;
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    if (c.is_p[k] || c.index[k] < i) gens.push_back(c.values[k]);
  }
  auto sg = semigroup_upto(gens, cap);
  std::vector<PairVec> members;
  enumerate_below(c.values, cap, [&](const std::vector<std::int64_t>& w, const Value& v) {
    PairVec pv = c.to_pair(w);
    if (pv.t_at(i) == 0) return;
    if (!st.values().obstacles.irreducible(pv, i)) return;
    if (!sg.count(key(v))) return;
    members.push_back(pv);
  });
  std::set<PairVec> out;
  for (const auto& a : members) {
    bool minimal = true;
    for (const auto& b : members) {
      if (!(b == a) && b.leq(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(a);
  }
  return out;
}

/// Ideal oracle: minimal elements of { v : value(v) >= sigma } over the given coordinates, by
/// pairwise comparison. A coordinate of value >= sigma can only occur as a unit vector in a
/// minimal element, so the enumeration runs over the smaller coordinates only.
inline std::set<PairVec> ideal_oracle(const Coords& c, const Value& sigma) {
  std::set<PairVec> out;
  if (sign(sigma) != Sign::positive) {
    out.insert(PairVec());
    return out;
  }
  Coords small;
  Value top = Value::zero(sigma.basis());
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    std::vector<std::int64_t> unit(c.values.size(), 0);
    unit[k] = 1;
    if (c.values[k] >= sigma) {
      out.insert(c.to_pair(unit));
    } else {
      small.is_p.push_back(c.is_p[k]);
      small.index.push_back(c.index[k]);
      small.values.push_back(c.values[k]);
      if (c.values[k] > top) top = c.values[k];
    }
  }
  std::vector<PairVec> above;
  enumerate_below(
      small.values, sigma + top,
      [&](const std::vector<std::int64_t>& w, const Value& v) {
        if (v >= sigma) above.push_back(small.to_pair(w));
      },
      true);
  for (const auto& a : above) {
    bool minimal = true;
    for (const auto& b : above) {
      if (!(b == a) && b.leq(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(a);
  }
  return out;
}

/// Random polynomial in the ring variables: up to `terms` terms of degree <= `degree`.
inline LaurentPoly random_poly(std::mt19937& rng, const VarListPtr& ring, int terms, int degree) {
  std::uniform_int_distribution<int> coef(-3, 3), exp(0, degree), count(1, terms);
  LaurentPoly f = LaurentPoly::constant(ring, 0);
  int n = count(rng);
  for (int k = 0; k < n; ++k) {
    int c = coef(rng);
    if (c == 0) c = 1;
    f = f + LaurentPoly::monomial(ring, {exp(rng), exp(rng), exp(rng)}, c);
  }
  return f;
}

/// Failures of the construction invariants (empty when all hold).
inline std::vector<std::string> construction_failures(const JumpState& st) {
  std::vector<std::string> out;
  for (const auto& p : st.p_chain()) {
    if (!p.q || !p.lambda) continue;
    const PJump& next = st.p(p.index + 1);
    Value qb = p.beta.scaled(*p.q);
    if (!(qb < next.beta)) out.push_back("P" + std::to_string(p.index + 1) + ": value does not exceed q*beta");
    Value rel = Value::zero(p.beta.basis());
    for (std::size_t k = 0; k < p.relation.size(); ++k) rel += st.p(k + 1).beta.scaled(p.relation[k]);
    if (rel != qb) out.push_back("P" + std::to_string(p.index) + ": relation value differs from q*beta");
    LaurentPoly rhs = LaurentPoly::constant(st.model().ring(), 1);
    for (std::size_t k = 0; k < p.relation.size(); ++k) rhs = rhs * st.p(k + 1).poly.pow(p.relation[k]);
    if (!(next.poly == p.poly.pow(*p.q) - rhs.scaled(*p.lambda))) {
      out.push_back("P" + std::to_string(p.index + 1) + ": polynomial differs from its definition");
    }
  }
  for (const auto& t : st.t_chain()) {
    if (!t.parent) continue;
    const auto& par = *t.parent;
    std::string name = "T" + std::to_string(t.index);
    Value a = value_of(par.pushing, st.values());
    Value b = value_of(par.replacement, st.values());
    if (a != b) out.push_back(name + ": |(A,C)| != |(L,N)|");
    if (sgn(par.mu) == 0) out.push_back(name + ": mu is zero");
    if (!st.values().obstacles.irreducible(par.replacement, par.step)) out.push_back(name + ": (L,N) reducible");
    LaurentPoly def = st.monomial_poly(par.pushing) - st.monomial_poly(par.replacement).scaled(par.mu);
    if (!(def == t.poly)) out.push_back(name + ": polynomial differs from its definition");
    if (!t.poly.is_zero()) {
      Value nu = st.model().nu(t.poly);
      if (nu != t.gamma) out.push_back(name + ": recorded value differs from nu");
      if (!(a < nu)) out.push_back(name + ": nu(T_AC) does not exceed |(A,C)|");
    }
  }
  return out;
}

/// Pushing sets checked against the enumeration oracle, plus antichain and sub-vector minimality.
inline std::vector<std::string> pushing_failures(const JumpState& st, const Value& slack) {
  std::vector<std::string> out;
  for (const auto& t : st.t_chain()) {
    if (!t.processed || t.kind != TKind::commensurable) continue;
    std::string name = "D" + std::to_string(t.index);
    Value top = Value::zero(slack.basis());
    for (const auto& d : t.pushing_set) {
      Value v = value_of(d, st.values());
      if (v > top) top = v;
    }
    std::set<PairVec> oracle = pushing_oracle(st, t.index, top + slack);
    std::set<PairVec> got(t.pushing_set.begin(), t.pushing_set.end());
    if (got != oracle) out.push_back(name + ": differs from the enumeration oracle");
    for (const auto& a : t.pushing_set) {
      for (const auto& b : t.pushing_set) {
        if (!(a == b) && a.leq(b)) out.push_back(name + ": not an antichain");
      }
    }
    // Every proper sub-vector with positive last entry fails to push or is reducible.
    Coords c = coords_upto(st, t.index, t.m);
    std::vector<Value> gens;
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      if (c.is_p[k] || c.index[k] < t.index) gens.push_back(c.values[k]);
    }
    for (const auto& d : t.pushing_set) {
      auto sg = semigroup_upto(gens, value_of(d, st.values()));
      std::vector<std::int64_t> full = d.concat(t.m, t.index);
      std::vector<std::int64_t> sub(full.size(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == full.size()) {
          if (sub == full || sub.back() == 0) return;
          PairVec pv = PairVec::from_concat(sub, t.m);
          if (st.values().obstacles.irreducible(pv, t.index) && sg.count(key(value_of(pv, st.values())))) {
            out.push_back(name + ": " + d.to_string() + " is not minimal");
          }
          return;
        }
        for (std::int64_t e = 0; e <= full[k]; ++e) {
          sub[k] = e;
          rec(k + 1);
        }
        sub[k] = 0;
      };
      rec(0);
    }
  }
  return out;
}

/// Distinct values of irreducible vectors over the processed chain, up to `cap`.
inline std::vector<std::string> uniqueness_failures(const JumpState& st, const Value& cap, std::size_t* checked) {
  std::vector<std::string> out;
  Coords c = coords_upto(st, st.values().processed);
  std::map<std::vector<Rational>, PairVec> seen;
  std::size_t n = 0;
  enumerate_below(c.values, cap, [&](const std::vector<std::int64_t>& w, const Value& v) {
    PairVec pv = c.to_pair(w);
    if (!st.values().obstacles.irreducible(pv)) return;
    ++n;
    auto [it, fresh] = seen.emplace(key(v), pv);
    if (!fresh) out.push_back(it->second.to_string() + " and " + pv.to_string() + " share value " + v.to_string());
  });
  if (checked) *checked = n;
  return out;
}

/// Valuation axioms on random pairs in the ring of `st`'s model.
inline std::vector<std::string> valuation_axiom_failures(const ValuationModel& model, int pairs, unsigned seed) {
  std::vector<std::string> out;
  std::mt19937 rng(seed);
  for (int k = 0; k < pairs; ++k) {
    LaurentPoly f = random_poly(rng, model.ring(), 4, 4);
    LaurentPoly g = random_poly(rng, model.ring(), 4, 4);
    if (f.is_zero() || g.is_zero()) continue;
    Value nf = model.nu(f), ng = model.nu(g);
    if (model.nu(f * g) != nf + ng) out.push_back("nu(fg) != nu(f)+nu(g) for f=" + f.to_string());
    LaurentPoly s = f + g;
    if (s.is_zero()) continue;
    Value ns = model.nu(s);
    Value lo = nf < ng ? nf : ng;
    if (ns < lo) out.push_back("nu(f+g) < min for f=" + f.to_string());
    if (nf != ng && ns != lo) out.push_back("nu(f+g) != min with distinct values for f=" + f.to_string());
  }
  return out;
}

/// Random sigma = a + b*sqrt(2) + c*sqrt(r) in [0, cap) with small rational coefficients.
inline Value random_sigma(std::mt19937& rng, const BasisPtr& basis, const Value& cap) {
  std::uniform_int_distribution<int> num(-40, 40);
  while (true) {
    std::vector<Rational> coeffs(basis->size());
    for (auto& q : coeffs) q = Rational(num(rng), 8);
    Value v(basis, coeffs);
    if (sign(v) != Sign::negative && v < cap) return v;
  }
}

}  // namespace genseq::testing
