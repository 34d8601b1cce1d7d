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

#include <genseq/valmodel.hpp>

#include <genseq/lattice.hpp>

namespace genseq {

ValuationModel::ValuationModel(BasisPtr basis, VarListPtr ambient, std::vector<Value> ambient_values, VarListPtr ring,
                               std::vector<LaurentPoly> ring_images)
    : basis_(std::move(basis)),
      ambient_(std::move(ambient)),
      ambient_values_(std::move(ambient_values)),
      ring_(std::move(ring)),
      ring_images_(std::move(ring_images)) {
  if (!basis_ || !ambient_ || !ring_) throw UsageError("incomplete valuation model");
  if (ambient_values_.size() != ambient_->size()) throw UsageError("one value per ambient variable is required");
  if (ring_->size() != 3) throw UsageError("exactly three ring variables are required");
  if (ring_images_.size() != ring_->size()) throw UsageError("one image per ring variable is required");
  for (const auto& v : ambient_values_) {
    if (!(*v.basis() == *basis_)) throw UsageError("ambient value over a different radical basis");
  }
  for (const auto& img : ring_images_) {
    if (!(*img.vars() == *ambient_)) throw UsageError("ring image over a different variable list");
  }
}

std::vector<std::string> ValuationModel::validate() const {
  std::vector<std::string> issues;
  // Independence: the coefficient matrix of the ambient values has full row rank.
  Integer denom = 1;
  for (const auto& v : ambient_values_) {
    for (const auto& c : v.coeffs()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
  }
  IntMatrix rows;
  for (const auto& v : ambient_values_) {
    IntVector row;
    for (const auto& c : v.coeffs()) row.push_back(Rational(c * denom).get_num());
    rows.push_back(std::move(row));
  }
  IntegerLattice lat(rows, basis_->size());
  if (lat.rank() < ambient_values_.size()) {
    issues.push_back("ambient values are linearly dependent over Q (rank " + std::to_string(lat.rank()) + " < " +
                     std::to_string(ambient_values_.size()) + ")");
    return issues;
  }
  std::vector<std::optional<Value>> ring_values;
  for (std::size_t k = 0; k < ring_images_.size(); ++k) {
    const std::string& name = ring_->names()[k];
    if (ring_images_[k].is_zero()) {
      issues.push_back("ring variable " + name + " maps to zero");
      ring_values.push_back(std::nullopt);
      continue;
    }
    Value v = initial_term_ambient(ring_images_[k]).value;
    if (sign(v) != Sign::positive) {
      issues.push_back("ring variable " + name + " has non-positive value " + v.to_string());
    }
    ring_values.push_back(v);
  }
  for (std::size_t k = 0; k + 1 < ring_values.size(); ++k) {
    if (ring_values[k] && ring_values[k + 1] && *ring_values[k] > *ring_values[k + 1]) {
      issues.push_back("ring values are not ordered: value of " + ring_->names()[k] + " exceeds value of " +
                       ring_->names()[k + 1]);
    }
  }
  return issues;
}

Value ValuationModel::monomial_value(const Exponents& e) const {
  if (e.size() != ambient_values_.size()) throw UsageError("exponent vector has wrong length");
  std::vector<Rational> coeffs(basis_->size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    const auto& vc = ambient_values_[k].coeffs();
    for (std::size_t r = 0; r < coeffs.size(); ++r) coeffs[r] += vc[r] * e[k];
  }
  return Value(basis_, std::move(coeffs));
}

LaurentPoly ValuationModel::expand(const LaurentPoly& f) const {
  if (!(*f.vars() == *ring_)) throw UsageError("polynomial is not over the ring variables");
  std::string key = f.to_string();
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  LaurentPoly g = substitute(f, ring_images_);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(std::move(key), g);
  return g;
}

InitialTerm ValuationModel::initial_term_ambient(const LaurentPoly& g) const {
  if (g.is_zero()) throw UsageError("valuation of zero");
  const std::pair<const Exponents, Rational>* best = nullptr;
  std::optional<Value> best_value;
  for (const auto& term : g.terms()) {
    Value v = monomial_value(term.first);
    if (!best_value || v < *best_value) {
      best_value = std::move(v);
      best = &term;
    } else if (v == *best_value) {
      // Independent ambient values make distinct monomials have distinct values.
      throw ConsistencyError("two monomials share the minimal value; ambient values are dependent");
    }
  }
  return {*best_value, best->first, best->second};
}

InitialTerm ValuationModel::initial_term(const LaurentPoly& f) const { return initial_term_ambient(expand(f)); }

Value ValuationModel::nu(const LaurentPoly& f) const { return initial_term(f).value; }

std::optional<Rational> ValuationModel::residue_ratio(const LaurentPoly& f, const LaurentPoly& g) const {
  InitialTerm a = initial_term(f);
  InitialTerm b = initial_term(g);
  if (a.value != b.value) return std::nullopt;
  if (a.monomial != b.monomial) throw ConsistencyError("equal values with different initial monomials");
  return a.coeff / b.coeff;
}

}  // namespace genseq
