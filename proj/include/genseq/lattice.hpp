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
 * @file lattice.hpp
 * Integer lattices spanned by finitely many vectors of Z^d: row echelon
 * (Hermite) form with a unimodular transform, membership, rational
 * coordinates, relation lattices and Graver bases.
 */
#pragma once

#include <genseq/common.hpp>

#include <vector>

namespace genseq {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// The Z-span of the rows of a generator matrix.
class IntegerLattice {
 public:
  /// `generators` are rows of equal length `dim`.
  IntegerLattice(const IntMatrix& generators, std::size_t dim);

  std::size_t rank() const { return basis_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t generator_count() const { return transform_.size(); }

  /// Echelon basis rows; pivot column of row t is pivots()[t].
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of v in the echelon basis, or nullopt when v is outside the Q-span.
  std::optional<std::vector<Rational>> rational_coordinates(const std::vector<Rational>& v) const;

  /// An integer combination of the generators equal to v, if v is in the lattice.
  std::optional<IntVector> representation(const std::vector<Rational>& v) const;

  /// Basis of the relation lattice {c : sum c_j g_j = 0}.
  const IntMatrix& relations() const { return relations_; }

 private:
  std::size_t dim_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
  IntMatrix transform_;  // transform_ * generators = [basis_; 0]
  IntMatrix relations_;
};

/// Graver basis of the lattice spanned by `lattice_basis` (rows): the
/// conformally minimal nonzero lattice vectors, computed by the
/// normal-form completion procedure. Returns nullopt if more than
/// `max_elements` intermediate elements would be needed.
std::optional<std::vector<std::vector<std::int64_t>>> graver_basis(const IntMatrix& lattice_basis,
                                                                   std::size_t max_elements);

}  // namespace genseq
