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
 * @file valmodel.hpp
 * A computable valuation: a monomial valuation on ambient variables with
 * rationally independent values, pulled back along a substitution that
 * expresses the ring variables x, y, z as Laurent polynomials in the
 * ambient ones.
 */
#pragma once

#include <genseq/laurent.hpp>
#include <genseq/values.hpp>

#include <mutex>
#include <unordered_map>

namespace genseq {

struct InitialTerm {
  Value value;
  Exponents monomial;  // ambient exponents
  Rational coeff;
};

class ValuationModel {
 public:
  /// `ring_images` are the images of the three ring variables in the ambient ones.
  ValuationModel(BasisPtr basis, VarListPtr ambient, std::vector<Value> ambient_values, VarListPtr ring,
                 std::vector<LaurentPoly> ring_images);

  const BasisPtr& basis() const { return basis_; }
  const VarListPtr& ambient() const { return ambient_; }
  const std::vector<Value>& ambient_values() const { return ambient_values_; }
  const VarListPtr& ring() const { return ring_; }
  const std::vector<LaurentPoly>& ring_images() const { return ring_images_; }

  /// All violated hypotheses; empty when the model is usable.
  std::vector<std::string> validate() const;

  /// Value of an ambient monomial.
  Value monomial_value(const Exponents& e) const;

  /// Ambient expansion of a ring polynomial (memoized).
  LaurentPoly expand(const LaurentPoly& f) const;

  /// Minimal-value term of an ambient Laurent polynomial.
  InitialTerm initial_term_ambient(const LaurentPoly& g) const;
  InitialTerm initial_term(const LaurentPoly& f) const;
  Value nu(const LaurentPoly& f) const;

  /// Ratio of initial coefficients when both values agree, else nullopt.
  std::optional<Rational> residue_ratio(const LaurentPoly& f, const LaurentPoly& g) const;

 private:
  BasisPtr basis_;
  VarListPtr ambient_;
  std::vector<Value> ambient_values_;
  VarListPtr ring_;
  std::vector<LaurentPoly> ring_images_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::string, LaurentPoly> cache_;
};

}  // namespace genseq
