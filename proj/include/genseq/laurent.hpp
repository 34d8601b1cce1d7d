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
 * @file laurent.hpp
 * Sparse Laurent polynomials with rational coefficients in a fixed list of
 * variables.
 */
#pragma once

#include <genseq/common.hpp>

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace genseq {

/// Ordered variable names. Names may contain letters, digits, '_' and '\''.
class VarList {
 public:
  explicit VarList(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarList&) const = default;

 private:
  std::vector<std::string> names_;
};

using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr make_vars(std::vector<std::string> names);

/// One exponent per variable; negative entries allowed.
using Exponents = std::vector<std::int64_t>;

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit LaurentPoly(VarListPtr vars);

  static LaurentPoly constant(const VarListPtr& vars, const Rational& c);
  static LaurentPoly variable(const VarListPtr& vars, std::size_t index);
  static LaurentPoly variable(const VarListPtr& vars, std::string_view name);
  static LaurentPoly monomial(const VarListPtr& vars, Exponents exps, const Rational& coeff = 1);

  const VarListPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Single term (a unit monomial times a nonzero coefficient).
  bool is_monomial() const { return terms_.size() == 1; }
  /// True iff no exponent is negative.
  bool is_polynomial() const;
  /// Largest exponent sum over the terms; 0 for the zero polynomial.
  std::int64_t total_degree() const;

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly pow(std::uint64_t e) const;
  /// Inverse of a single-term polynomial.
  LaurentPoly inverse_monomial() const;

  bool operator==(const LaurentPoly& other) const;

  /// Terms in descending lexicographic order of exponents, each with an
  /// explicit coefficient: "-1*x^5*z'^2 + 2*x^4*y^2*z'".
  std::string to_string() const;

 private:
  void require_same_vars(const LaurentPoly& other) const;
  void add_term(const Exponents& e, const Rational& c);

  VarListPtr vars_;
  TermMap terms_;
};

/// Replaces every variable of f by images[k] (all over a common variable
/// list). Negative exponents require single-term images.
LaurentPoly substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images);

/// Parses sums of products of rationals, variables, powers (possibly
/// negative) and parenthesised subexpressions. Division is allowed only by
/// a single-term factor.
LaurentPoly parse_poly(std::string_view text, const VarListPtr& vars);

}  // namespace genseq
