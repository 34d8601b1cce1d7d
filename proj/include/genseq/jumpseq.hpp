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
 * @file jumpseq.hpp
 * Construction of the jumping polynomials: the P-chain refining the
 * (x, y)-data and the T-chain built step by step from minimal pushing sets.
 */
#pragma once

#include <genseq/grouplat.hpp>
#include <genseq/valmodel.hpp>

namespace genseq {

struct PJump {
  std::size_t index = 0;
  LaurentPoly poly;
  Value beta;
  Multiplicity q;                      // nullopt: not commensurable (or unknown when truncated)
  std::vector<std::int64_t> relation;  // L(i): q_i * beta_i = relation . beta(i-1), when q is finite
  std::optional<Rational> lambda;      // residue making the next P, when q is finite
  InitialTerm initial;
};

enum class TKind { zero, commensurable, incommensurable };

std::string to_string(TKind kind);

struct TParent {
  std::size_t step;     // the T whose pushing set produced this one
  PairVec pushing;      // (A, C)
  PairVec replacement;  // (L(AC), N(AC))
  Rational mu;
};

struct TJump {
  std::size_t index = 0;
  LaurentPoly poly;
  Value gamma;  // zero when poly is zero
  TKind kind = TKind::zero;
  Multiplicity s{};
  std::size_t m = 1;
  std::optional<InitialTerm> initial{};  // absent for a zero polynomial
  LaurentPoly expansion;               // ambient expansion

  bool processed = false;
  std::vector<PairVec> pushing_set{};  // D_i, once processed
  bool pushing_complete = true;
  std::string pushing_method{};
  std::vector<std::size_t> successors{};  // global indices of immediate successors

  std::optional<TParent> parent{};
};

struct Bounds {
  std::size_t max_p_len = 16;
  std::size_t max_t_index = 64;
  std::string max_value = "20";
  PushingSearchLimits pushing;
};

enum class StopReason { none, exhausted, max_value, max_t_index };

std::string to_string(StopReason reason);

class JumpState {
 public:
  JumpState(std::shared_ptr<const ValuationModel> model, Bounds bounds);

  const ValuationModel& model() const { return *model_; }
  const std::shared_ptr<const ValuationModel>& model_ptr() const { return model_; }
  const Bounds& bounds() const { return bounds_; }
  const Value& max_value() const { return max_value_; }

  const std::vector<PJump>& p_chain() const { return p_chain_; }
  const std::vector<TJump>& t_chain() const { return t_chain_; }
  const PJump& p(std::size_t k) const;  // 1-based
  const TJump& t(std::size_t j) const;  // 1-based
  const ChainValues& values() const { return values_; }

  bool p_complete() const { return p_complete_; }
  bool t_truncated() const { return stop_ != StopReason::exhausted && stop_ != StopReason::none; }
  StopReason stop_reason() const { return stop_; }
  bool pushing_complete() const;

  /// Builds P_1, P_2, ... up to the length bound.
  void build_p_chain();
  /// Processes the next unprocessed T. Returns false when nothing was done.
  bool step_t_chain();
  /// Repeats step_t_chain until the chain is exhausted or a bound stops it.
  void build_t_chain();

  /// Global indices of the immediate successors of T_i.
  std::vector<std::size_t> successors(std::size_t i) const;
  /// True iff T_j is reachable from T_i through immediate successors.
  bool is_successor(std::size_t i, std::size_t j) const;

  /// P^A T^C in the ring variables.
  LaurentPoly monomial_poly(const PairVec& v) const;
  /// Ambient expansion of P^A T^C, built from the cached expansions.
  LaurentPoly monomial_expansion(const PairVec& v) const;
  /// Initial term of P^A T^C (product of initial terms).
  InitialTerm monomial_initial(const PairVec& v) const;
  /// Total degree of P^A T^C in the ring variables.
  std::int64_t monomial_degree(const PairVec& v) const;

 private:
  void append_t(LaurentPoly poly, LaurentPoly expansion, std::optional<TParent> parent);

  std::shared_ptr<const ValuationModel> model_;
  Bounds bounds_;
  Value max_value_;
  std::vector<PJump> p_chain_;
  std::vector<TJump> t_chain_;
  ChainValues values_;
  bool p_complete_ = false;
  bool p_built_ = false;
  StopReason stop_ = StopReason::none;
};

/// Builds a state for `model` and runs the P-chain.
JumpState build_p_chain(std::shared_ptr<const ValuationModel> model, const Bounds& bounds);

}  // namespace genseq
