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

#include <genseq/jumpseq.hpp>

#include <deque>
#include <set>

namespace genseq {

std::string to_string(TKind kind) {
  switch (kind) {
    case TKind::zero:
      return "zero";
    case TKind::commensurable:
      return "commensurable";
    case TKind::incommensurable:
      return "incommensurable";
  }
  return "unknown";
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::none:
      return "not-run";
    case StopReason::exhausted:
      return "exhausted";
    case StopReason::max_value:
      return "max-value";
    case StopReason::max_t_index:
      return "max-t-index";
  }
  return "unknown";
}

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::string out;
  for (const auto& s : issues) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace

JumpState::JumpState(std::shared_ptr<const ValuationModel> model, Bounds bounds)
    : model_(std::move(model)),
      bounds_(std::move(bounds)),
      max_value_(Value::zero(model_->basis())) {
  auto issues = model_->validate();
  if (!issues.empty()) throw UsageError("invalid valuation model: " + join_issues(issues));
  if (bounds_.max_p_len == 0) throw UsageError("max_p_len must be positive");
  max_value_ = parse_value(bounds_.max_value, model_->basis());
  values_.basis = model_->basis();
}

const PJump& JumpState::p(std::size_t k) const {
  if (k == 0 || k > p_chain_.size()) throw UsageError("no P_" + std::to_string(k));
  return p_chain_[k - 1];
}

const TJump& JumpState::t(std::size_t j) const {
  if (j == 0 || j > t_chain_.size()) throw UsageError("no T_" + std::to_string(j));
  return t_chain_[j - 1];
}

bool JumpState::pushing_complete() const {
  for (const auto& t : t_chain_) {
    if (t.processed && !t.pushing_complete) return false;
  }
  return true;
}

void JumpState::build_p_chain() {
  if (p_built_) throw UsageError("P-chain already built");
  const VarListPtr& ring = model_->ring();
  auto add_p = [&](LaurentPoly poly) {
    InitialTerm init = model_->initial_term(poly);
    PJump pj{p_chain_.size() + 1, std::move(poly), init.value, std::nullopt, {}, std::nullopt, init};
    values_.beta.push_back(pj.beta);
    values_.q.push_back(std::nullopt);
    p_chain_.push_back(std::move(pj));
  };
  add_p(LaurentPoly::variable(ring, 0));
  p_complete_ = false;
  if (bounds_.max_p_len >= 2) {
    add_p(LaurentPoly::variable(ring, 1));
    while (true) {
      const std::size_t i = p_chain_.size();
      std::vector<Value> below(values_.beta.begin(), values_.beta.begin() + static_cast<std::ptrdiff_t>(i - 1));
      Multiplicity q = min_multiple_in_group(values_.beta[i - 1], below);
      if (!q) {
        p_complete_ = true;
        break;
      }
      if (p_chain_.size() >= bounds_.max_p_len) break;
      PJump& cur = p_chain_[i - 1];
      Value target = cur.beta.scaled(*q);
      SignedPair rel = permissible_decompose(target, values_, i - 1, 0);
      std::vector<std::int64_t> l;
      for (const auto& x : rel.l) {
        if (sgn(x) < 0 || !x.fits_slong_p()) throw ConsistencyError("relation for P_" + std::to_string(i) + " is not nonnegative");
        l.push_back(x.get_si());
      }
      LaurentPoly lhs = cur.poly.pow(static_cast<std::uint64_t>(*q));
      LaurentPoly rhs = monomial_poly(PairVec(l, {}));
      auto lambda = model_->residue_ratio(lhs, rhs);
      if (!lambda || sgn(*lambda) == 0) throw ConsistencyError("no residue for P_" + std::to_string(i));
      cur.q = q;
      cur.relation = l;
      cur.lambda = lambda;
      values_.q[i - 1] = q;
      values_.obstacles.add(PairVec::p_unit(i, *q), 0, ObstacleOrigin::p_relation);
      LaurentPoly next = lhs - rhs.scaled(*lambda);
      if (next.is_zero()) throw ConsistencyError("P_" + std::to_string(i + 1) + " vanishes");
      add_p(std::move(next));
      if (!(p_chain_.back().beta > target)) {
        throw ConsistencyError("value of P_" + std::to_string(i + 1) + " does not exceed q*beta");
      }
    }
  }
  p_built_ = true;
  append_t(LaurentPoly::variable(ring, 2), model_->expand(LaurentPoly::variable(ring, 2)), std::nullopt);
}

void JumpState::append_t(LaurentPoly poly, LaurentPoly expansion, std::optional<TParent> parent) {
  const std::size_t j = t_chain_.size() + 1;
  const std::size_t m_prev = values_.m.back();
  TJump tj{.index = j,
           .poly = std::move(poly),
           .gamma = Value::zero(model_->basis()),
           .expansion = std::move(expansion),
           .parent = std::move(parent)};
  if (tj.poly.is_zero()) {
    tj.kind = TKind::zero;
    tj.s = 1;
    tj.m = m_prev;
  } else {
    tj.initial = model_->initial_term_ambient(tj.expansion);
    tj.gamma = tj.initial->value;
    Multiplicity s = min_multiple_in_group(tj.gamma, chain_generators(values_, values_.p_count(), j - 1, false));
    tj.s = s;
    if (!s) {
      tj.kind = TKind::incommensurable;
      tj.m = m_prev;
    } else {
      tj.kind = TKind::commensurable;
      auto level = min_p_level(tj.gamma.scaled(*s), values_, j - 1);
      if (!level) throw ConsistencyError("multiple of the value of T_" + std::to_string(j) + " not in the group");
      tj.m = std::max(m_prev, *level);
    }
  }
  values_.gamma.push_back(tj.gamma);
  values_.s.push_back(tj.s);
  values_.m.push_back(tj.m);
  values_.zero_t.push_back(tj.kind == TKind::zero);
  t_chain_.push_back(std::move(tj));
}

bool JumpState::step_t_chain() {
  if (!p_built_) throw UsageError("build the P-chain first");
  const std::size_t i = values_.processed + 1;
  if (i > t_chain_.size()) {
    stop_ = StopReason::exhausted;
    return false;
  }
  if (t_chain_[i - 1].kind != TKind::zero && t_chain_[i - 1].gamma > max_value_) {
    stop_ = StopReason::max_value;
    return false;
  }
  switch (t_chain_[i - 1].kind) {
    case TKind::zero:
      values_.obstacles.add(PairVec::t_unit(i), i, ObstacleOrigin::zero_t);
      break;
    case TKind::incommensurable:
      break;
    case TKind::commensurable: {
      PushingSet ps = minimal_pushing_set(values_, i, bounds_.pushing);
      if (t_chain_.size() + ps.members.size() > bounds_.max_t_index) {
        stop_ = StopReason::max_t_index;
        return false;
      }
      const std::size_t m = values_.m[i];
      std::vector<std::size_t> new_indices;
      for (const auto& ac : ps.members) {
        Value v = value_of(ac, values_);
        PairVec ln = irreducible_decompose(v, values_, m, i - 1);
        if (!values_.obstacles.irreducible(ln, i)) {
          throw ConsistencyError("replacement " + ln.to_string() + " is not irreducible");
        }
        InitialTerm ia = monomial_initial(ac);
        InitialTerm il = monomial_initial(ln);
        if (ia.value != il.value || ia.monomial != il.monomial) {
          throw ConsistencyError("initial terms of " + ac.to_string() + " and " + ln.to_string() + " differ");
        }
        Rational mu = ia.coeff / il.coeff;
        LaurentPoly poly = monomial_poly(ac) - monomial_poly(ln).scaled(mu);
        LaurentPoly expansion = monomial_expansion(ac) - monomial_expansion(ln).scaled(mu);
        if (poly.is_zero() != expansion.is_zero()) throw ConsistencyError("expansion disagrees with polynomial");
        append_t(std::move(poly), std::move(expansion), TParent{i, ac, ln, mu});
        const TJump& added = t_chain_.back();
        if (added.kind != TKind::zero && !(added.gamma > v)) {
          throw ConsistencyError("T_" + std::to_string(added.index) + " does not raise the value");
        }
        new_indices.push_back(added.index);
      }
      for (const auto& ac : ps.members) values_.obstacles.add(ac, i, ObstacleOrigin::pushing);
      TJump& cur = t_chain_[i - 1];
      cur.pushing_set = std::move(ps.members);
      cur.pushing_complete = ps.complete;
      cur.pushing_method = ps.method;
      cur.successors = std::move(new_indices);
      break;
    }
  }
  t_chain_[i - 1].processed = true;
  values_.processed = i;
  return true;
}

void JumpState::build_t_chain() {
  while (step_t_chain()) {
  }
}

std::vector<std::size_t> JumpState::successors(std::size_t i) const { return t(i).successors; }

bool JumpState::is_successor(std::size_t i, std::size_t j) const {
  std::deque<std::size_t> todo(t(i).successors.begin(), t(i).successors.end());
  std::set<std::size_t> seen;
  while (!todo.empty()) {
    std::size_t k = todo.front();
    todo.pop_front();
    if (k == j) return true;
    if (!seen.insert(k).second) continue;
    for (auto s : t(k).successors) todo.push_back(s);
  }
  return false;
}

LaurentPoly JumpState::monomial_poly(const PairVec& v) const {
  LaurentPoly out = LaurentPoly::constant(model_->ring(), 1);
  for (std::size_t k = 1; k <= v.p().size(); ++k) {
    if (v.p_at(k)) out = out * p(k).poly.pow(static_cast<std::uint64_t>(v.p_at(k)));
  }
  for (std::size_t j = 1; j <= v.t().size(); ++j) {
    if (v.t_at(j)) out = out * t(j).poly.pow(static_cast<std::uint64_t>(v.t_at(j)));
  }
  return out;
}

LaurentPoly JumpState::monomial_expansion(const PairVec& v) const {
  LaurentPoly out = LaurentPoly::constant(model_->ambient(), 1);
  for (std::size_t k = 1; k <= v.p().size(); ++k) {
    if (v.p_at(k)) out = out * model_->expand(p(k).poly).pow(static_cast<std::uint64_t>(v.p_at(k)));
  }
  for (std::size_t j = 1; j <= v.t().size(); ++j) {
    if (v.t_at(j)) out = out * t(j).expansion.pow(static_cast<std::uint64_t>(v.t_at(j)));
  }
  return out;
}

InitialTerm JumpState::monomial_initial(const PairVec& v) const {
  Exponents mono(model_->ambient()->size(), 0);
  Rational coeff = 1;
  auto absorb = [&](const InitialTerm& it, std::int64_t e) {
    for (std::size_t r = 0; r < mono.size(); ++r) mono[r] += e * it.monomial[r];
    for (std::int64_t n = 0; n < e; ++n) coeff *= it.coeff;
  };
  for (std::size_t k = 1; k <= v.p().size(); ++k) {
    if (v.p_at(k)) absorb(p(k).initial, v.p_at(k));
  }
  for (std::size_t j = 1; j <= v.t().size(); ++j) {
    if (!v.t_at(j)) continue;
    if (!t(j).initial) throw UsageError("monomial contains the zero polynomial T_" + std::to_string(j));
    absorb(*t(j).initial, v.t_at(j));
  }
  return {value_of(v, values_), std::move(mono), coeff};
}

std::int64_t JumpState::monomial_degree(const PairVec& v) const {
  std::int64_t d = 0;
  for (std::size_t k = 1; k <= v.p().size(); ++k) d += v.p_at(k) * p(k).poly.total_degree();
  for (std::size_t j = 1; j <= v.t().size(); ++j) d += v.t_at(j) * t(j).poly.total_degree();
  return d;
}

JumpState build_p_chain(std::shared_ptr<const ValuationModel> model, const Bounds& bounds) {
  JumpState state(std::move(model), bounds);
  state.build_p_chain();
  return state;
}

}  // namespace genseq
