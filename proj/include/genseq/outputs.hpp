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
 * @file outputs.hpp
 * Consumers of a built JumpState: monomial generators of valuation ideals,
 * redundancy certificates, generating sequences, the binomial presentation
 * of the graded algebra and the value semigroup below a cap.
 */
#pragma once

#include <genseq/jumpseq.hpp>

namespace genseq {

/// "P3", "T8"...
struct ChainRef {
  char kind = 'T';  // 'P' or 'T'
  std::size_t index = 0;

  std::string to_string() const { return std::string(1, kind) + std::to_string(index); }
  auto operator<=>(const ChainRef&) const = default;
};

struct IdealGenerators {
  std::vector<PairVec> members;  // antichain, sorted by value then grlex
  bool complete = false;         // true when no later chain element can change the answer
};

/// Minimal monomials P^A T^C of value >= sigma over the constructed P's and nonzero T's.
IdealGenerators ideal_generators(const JumpState& state, const Value& sigma);

struct RedundancyCaps {
  std::optional<Value> value_slack;  // default: 5 * beta_1
  std::int64_t degree_cap = 40;      // total degree in the ring variables of a single term
};

enum class CertificateStatus { certified, undecided, not_eligible };

std::string to_string(CertificateStatus status);

struct CertificateTerm {
  Rational coeff;
  PairVec monomial;
  Value value;
};

struct RedundancyCertificate {
  ChainRef target;
  CertificateStatus status = CertificateStatus::undecided;
  std::vector<CertificateTerm> combo;  // target = sum coeff * P^X T^Y, when certified
  std::string note;                    // why undecided / not eligible
};

RedundancyCertificate redundancy_certificate(const JumpState& state, ChainRef target, const RedundancyCaps& caps = {});

/// Re-checks a certificate as a polynomial identity in the ring variables.
bool verify_certificate(const JumpState& state, const RedundancyCertificate& cert);

struct SequenceEntry {
  ChainRef ref;
  LaurentPoly poly;
  Value value;
};

struct DroppedEntry {
  ChainRef ref;
  std::string reason;  // "zero", "certificate", "successor of T<k>"
  bool bounded = false;  // relies on an element that was never constructed or processed
};

struct GeneratingSequence {
  std::vector<SequenceEntry> entries;
  std::vector<DroppedEntry> dropped;
  std::vector<RedundancyCertificate> certificates;  // one per constructed element examined
  bool minimal_requested = false;
  bool certified = false;  // minimality certified through the value semigroup argument
  std::string note;
};

GeneratingSequence generating_sequence(const JumpState& state, bool minimal, const RedundancyCaps& caps = {});

struct GrRelation {
  ChainRef source;  // the P or T defined by this equation
  PairVec lhs;
  PairVec rhs;
  Rational scalar;
};

std::vector<GrRelation> gr_presentation(const JumpState& state);

struct SemigroupValues {
  std::vector<Value> values;  // sorted, distinct
  bool complete = false;
};

SemigroupValues semigroup_values_up_to(const JumpState& state, const Value& cap);

/// True when every value <= v of the full (infinite) chain is already accounted for.
bool chain_exact_below(const JumpState& state, const Value& v);

}  // namespace genseq
