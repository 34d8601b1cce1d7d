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
 * @file values.hpp
 * Exact real numbers of the form q0 + q1*sqrt(r1) + ... + qk*sqrt(rk) with
 * rational q's and distinct squarefree radicands. These carry every
 * valuation value in the library.
 */
#pragma once

#include <genseq/common.hpp>

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace genseq {

/// Ordered list of distinct squarefree radicands; the first is always 1.
class RadicalBasis {
 public:
  explicit RadicalBasis(std::vector<std::uint64_t> radicands);

  const std::vector<std::uint64_t>& radicands() const { return radicands_; }
  std::size_t size() const { return radicands_.size(); }
  std::optional<std::size_t> index_of(std::uint64_t radicand) const;

  bool operator==(const RadicalBasis&) const = default;

 private:
  std::vector<std::uint64_t> radicands_;
};

using BasisPtr = std::shared_ptr<const RadicalBasis>;

BasisPtr make_basis(std::vector<std::uint64_t> radicands);

bool is_squarefree(std::uint64_t n);

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Immutable exact value sum_k coeffs[k] * sqrt(radicands[k]).
class Value {
 public:
  Value(BasisPtr basis, std::vector<Rational> coeffs);

  static Value zero(const BasisPtr& basis);
  static Value rational(const BasisPtr& basis, const Rational& q);
  /// coeff * sqrt(radicand); radicand must be in the basis.
  static Value radical(const BasisPtr& basis, std::uint64_t radicand, const Rational& coeff = 1);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Value operator+(const Value& other) const;
  Value operator-(const Value& other) const;
  Value operator-() const;
  Value& operator+=(const Value& other);
  Value& operator-=(const Value& other);
  Value scaled(const Rational& r) const;

  /// Exact comparison as real numbers; bases must agree.
  std::strong_ordering operator<=>(const Value& other) const;
  bool operator==(const Value& other) const;

  /// "q0 + q1*sqrt(r1) + ..." with exact rationals, "0" for zero.
  std::string to_string() const;
  /// Decimal approximation with 12 significant digits (display only).
  std::string decimal() const;
  /// Closest double; never used in a decision.
  double approx() const;

  /// A rational interval of width at most 2^-bits containing the value.
  std::pair<Rational, Rational> enclosure(unsigned bits) const;

 private:
  void require_same_basis(const Value& other) const;

  BasisPtr basis_;
  std::vector<Rational> coeffs_;
};

/// Exact sign by symbolic zero test and adaptive interval refinement.
Sign sign(const Value& v);

inline Value operator*(const Rational& r, const Value& v) { return v.scaled(r); }

/// Parses expressions such as "2*sqrt(2) - 1", "sqrt(51)-5", "3/2".
Value parse_value(std::string_view text, const BasisPtr& basis);

/// Total order helper for ordered containers.
struct ValueLess {
  bool operator()(const Value& a, const Value& b) const { return (a <=> b) < 0; }
};

}  // namespace genseq
