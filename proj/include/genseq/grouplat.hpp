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
 * @file grouplat.hpp
 * Group and semigroup questions about finitely many positive values:
 * commensurability, minimal multiples, semigroup membership with witnesses,
 * permissible and irreducible decompositions and minimal pushing sets.
 *
 * Indices of P- and T-polynomials are 1-based throughout, matching the
 * numbering used in reports.
 */
#pragma once

#include <genseq/lattice.hpp>
#include <genseq/values.hpp>

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace genseq {

/// A pair (A, C) of nonnegative exponent vectors over P- and T-indices.
/// Stored with trailing zeros trimmed, so equal pairs compare equal.
class PairVec {
 public:
  PairVec() = default;
  PairVec(std::vector<std::int64_t> p, std::vector<std::int64_t> t);

  static PairVec p_unit(std::size_t k, std::int64_t mult = 1);
  static PairVec t_unit(std::size_t j, std::int64_t mult = 1);

  const std::vector<std::int64_t>& p() const { return p_; }
  const std::vector<std::int64_t>& t() const { return t_; }
  std::int64_t p_at(std::size_t k) const { return k >= 1 && k <= p_.size() ? p_[k - 1] : 0; }
  std::int64_t t_at(std::size_t j) const { return j >= 1 && j <= t_.size() ? t_[j - 1] : 0; }

  bool is_zero() const { return p_.empty() && t_.empty(); }
  std::int64_t degree() const;

  /// Componentwise order on both parts.
  bool leq(const PairVec& other) const;

  PairVec operator+(const PairVec& other) const;
  /// Requires other.leq(*this).
  PairVec operator-(const PairVec& other) const;

  /// The concatenation AC padded to m P-entries and i T-entries.
  std::vector<std::int64_t> concat(std::size_t m, std::size_t i) const;
  static PairVec from_concat(const std::vector<std::int64_t>& ac, std::size_t m);

  /// "(1,0|1)" padded to at least m and i entries.
  std::string to_string(std::size_t m = 0, std::size_t i = 0) const;

  auto operator<=>(const PairVec&) const = default;

 private:
  void trim();
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> t_;
};

/// Graded lexicographic order on the padded concatenation: degree first,
/// then lexicographic with smaller leading entries first.
bool grlex_less(const PairVec& a, const PairVec& b);

enum class ObstacleOrigin { p_relation, pushing, zero_t };

struct Obstacle {
  PairVec vec;
  std::size_t stage;  // member of the obstacle set before step stage+1
  ObstacleOrigin origin;
};

/// The obstacle set used by the irreducibility test, with the stage at
/// which each member entered it.
class ObstacleSet {
 public:
  void add(PairVec vec, std::size_t stage, ObstacleOrigin origin);
  const std::vector<Obstacle>& members() const { return members_; }

  /// True iff no member with stage < before_stage lies below v.
  bool irreducible(const PairVec& v, std::size_t before_stage = SIZE_MAX) const;

 private:
  std::vector<Obstacle> members_;
};

/// The values and multiplicities of a (partially built) chain.
struct ChainValues {
  BasisPtr basis;
  std::vector<Value> beta;        // beta[k-1] is the value of P_k
  std::vector<Multiplicity> q;    // q[k-1]; q[0] is always infinite
  std::vector<Value> gamma;       // gamma[j-1] is the value of T_j, zero if T_j = 0
  std::vector<Multiplicity> s;    // s[j-1], known for every classified T_j
  std::vector<std::size_t> m{1};  // m[j]; m[0] = 1
  std::vector<bool> zero_t;       // zero_t[j-1] iff T_j = 0
  ObstacleSet obstacles;
  std::size_t processed = 0;      // pushing sets of steps 1..processed are in `obstacles`

  std::size_t p_count() const { return beta.size(); }
  std::size_t t_count() const { return gamma.size(); }
  std::size_t classified() const { return s.size(); }
};

/// A.beta + C.gamma.
Value value_of(const PairVec& v, const ChainValues& cv);

bool is_commensurable(const Value& alpha, const std::vector<Value>& gens);

/// Least q >= 1 with q*alpha in the Z-span of gens; nullopt when none exists.
Multiplicity min_multiple_in_group(const Value& alpha, const std::vector<Value>& gens);

/// An integer combination of gens equal to alpha.
std::optional<std::vector<Integer>> group_representation(const Value& alpha, const std::vector<Value>& gens);

/// Membership in the semigroup generated by positive values. Negative
/// answers are cached, so one oracle should be reused for many queries
/// against the same generators. Thread safe.
class SemigroupOracle {
 public:
  explicit SemigroupOracle(std::vector<Value> gens);
  ~SemigroupOracle();
  SemigroupOracle(const SemigroupOracle&) = delete;
  SemigroupOracle& operator=(const SemigroupOracle&) = delete;

  const std::vector<Value>& generators() const { return gens_; }

  /// Nonnegative multiplicities, one per generator, or nullopt.
  std::optional<std::vector<std::int64_t>> contains(const Value& alpha) const;

 private:
  struct Impl;
  std::vector<Value> gens_;
  std::unique_ptr<Impl> impl_;
  mutable std::mutex mutex_;
};

std::optional<std::vector<std::int64_t>> semigroup_contains(const Value& alpha, const std::vector<Value>& gens);

/// Indices of generators not expressible through the others. Among equal
/// values only the first is kept.
std::vector<std::size_t> minimal_semigroup_generators(const std::vector<Value>& gens);

/// Generators of G_k + H_i: beta_1..beta_k, gamma_1..gamma_i (zeros skipped
/// when `skip_zero`).
std::vector<Value> chain_generators(const ChainValues& cv, std::size_t k, std::size_t i, bool skip_zero = true);

/// Least j with alpha in G_j + H_i, or nullopt.
std::optional<std::size_t> min_p_level(const Value& alpha, const ChainValues& cv, std::size_t i);

struct SignedPair {
  std::vector<Integer> l;  // coefficients of beta_1..beta_m
  std::vector<Integer> n;  // coefficients of gamma_1..gamma_i
};

/// The unique permissible (L, N) with |(L, N)| = alpha, m = max(k, m_i).
SignedPair permissible_decompose(const Value& alpha, const ChainValues& cv, std::size_t k, std::size_t i);

/// A representation of alpha irreducible for the obstacles of steps up to i.
/// Requires i <= cv.processed.
PairVec irreducible_decompose(const Value& alpha, const ChainValues& cv, std::size_t k, std::size_t i);

/// True iff v has positive i-th T-entry, no T-entries beyond i, and its value
/// lies in S_{m_i} + U_{i-1}.
bool pushes(const PairVec& v, const ChainValues& cv, std::size_t i);

struct PushingSearchLimits {
  std::size_t graver_max_elements = 20000;
  std::int64_t layer_cap = 16;       // fallback: multiples of s_i tried in the last entry
  std::int64_t coordinate_cap = 16;  // fallback: bound on every other entry
  std::int64_t degree_cap = 24;      // fallback: bound on the total degree
};

struct PushingSet {
  std::vector<PairVec> members;  // ordered by value, ties by grlex
  bool complete = true;
  std::string method;            // "graver" or "bounded-search"
};

/// The minimal irreducible vectors pushing gamma_i into S_{m_i} + U_{i-1}.
/// Requires T_i nonzero, commensurable, classified, and i == cv.processed + 1.
PushingSet minimal_pushing_set(const ChainValues& cv, std::size_t i, const PushingSearchLimits& limits = {});

}  // namespace genseq
