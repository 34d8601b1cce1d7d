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

#include <genseq/lattice.hpp>

#include <algorithm>
#include <queue>
#include <set>

namespace genseq {

namespace {

void axpy(IntVector& row, const Integer& factor, const IntVector& other) {
  for (std::size_t k = 0; k < row.size(); ++k) row[k] -= factor * other[k];
}

void negate(IntVector& row) {
  for (auto& x : row) x = -x;
}

}  // namespace

IntegerLattice::IntegerLattice(const IntMatrix& generators, std::size_t dim) : dim_(dim) {
  const std::size_t n = generators.size();
  IntMatrix a = generators;
  for (const auto& row : a) {
    if (row.size() != dim) throw UsageError("generator has wrong dimension");
  }
  transform_.assign(n, IntVector(n, 0));
  for (std::size_t k = 0; k < n; ++k) transform_[k][k] = 1;

  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < n; ++c) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = n;
      for (std::size_t k = r; k < n; ++k) {
        if (sgn(a[k][c]) == 0) continue;
        if (best == n || abs(a[k][c]) < abs(a[best][c])) best = k;
      }
      if (best == n) break;
      have_pivot = true;
      std::swap(a[r], a[best]);
      std::swap(transform_[r], transform_[best]);
      bool cleared = true;
      for (std::size_t k = r + 1; k < n; ++k) {
        if (sgn(a[k][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[k][c].get_mpz_t(), a[r][c].get_mpz_t());
        axpy(a[k], q, a[r]);
        axpy(transform_[k], q, transform_[r]);
        if (sgn(a[k][c]) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (sgn(a[r][c]) < 0) {
      negate(a[r]);
      negate(transform_[r]);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t k = 0; k < r; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[k][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      axpy(a[k], q, a[r]);
      axpy(transform_[k], q, transform_[r]);
    }
    pivots_.push_back(c);
    ++r;
  }
  basis_.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r));
  relations_.assign(transform_.begin() + static_cast<std::ptrdiff_t>(r), transform_.end());
}

std::optional<std::vector<Rational>> IntegerLattice::rational_coordinates(const std::vector<Rational>& v) const {
  if (v.size() != dim_) throw UsageError("vector has wrong dimension");
  std::vector<Rational> x(basis_.size());
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    Rational acc = v[pivots_[t]];
    for (std::size_t s = 0; s < t; ++s) acc -= x[s] * basis_[s][pivots_[t]];
    x[t] = acc / basis_[t][pivots_[t]];
  }
  for (std::size_t c = 0; c < dim_; ++c) {
    Rational acc = 0;
    for (std::size_t t = 0; t < basis_.size(); ++t) acc += x[t] * basis_[t][c];
    if (acc != v[c]) return std::nullopt;
  }
  return x;
}

std::optional<IntVector> IntegerLattice::representation(const std::vector<Rational>& v) const {
  auto x = rational_coordinates(v);
  if (!x) return std::nullopt;
  IntVector out(transform_.size(), 0);
  for (std::size_t t = 0; t < x->size(); ++t) {
    if ((*x)[t].get_den() != 1) return std::nullopt;
    Integer coeff = (*x)[t].get_num();
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeff * transform_[t][j];
  }
  return out;
}

namespace {

using Vec = std::vector<std::int64_t>;

bool conformal_leq(const Vec& h, const Vec& g) {
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] == 0) continue;
    if ((h[k] > 0) != (g[k] > 0) || g[k] == 0) return false;
    if ((h[k] > 0 ? h[k] : -h[k]) > (g[k] > 0 ? g[k] : -g[k])) return false;
  }
  return true;
}

std::int64_t norm1(const Vec& v) {
  std::int64_t n = 0;
  for (auto x : v) n += x < 0 ? -x : x;
  return n;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Vec neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
  return r;
}

void normal_form(Vec& s, const std::vector<Vec>& basis) {
  bool reduced = true;
  while (reduced && !is_zero(s)) {
    reduced = false;
    for (const auto& g : basis) {
      if (conformal_leq(g, s)) {
        for (std::size_t k = 0; k < s.size(); ++k) s[k] -= g[k];
        reduced = true;
        break;
      }
    }
  }
}

}  // namespace

std::optional<std::vector<std::vector<std::int64_t>>> graver_basis(const IntMatrix& lattice_basis,
                                                                   std::size_t max_elements) {
  std::vector<Vec> elements;
  std::set<Vec> seen;
  for (const auto& row : lattice_basis) {
    Vec v;
    for (const auto& x : row) {
      if (!x.fits_slong_p()) throw UsageError("lattice entry too large for Graver computation");
      v.push_back(x.get_si());
    }
    if (is_zero(v)) continue;
    for (const Vec& w : {v, neg(v)}) {
      if (seen.insert(w).second) elements.push_back(w);
    }
  }

  using Item = std::pair<std::int64_t, Vec>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pending;
  auto push_pairs = [&](const Vec& f) {
    for (const auto& g : elements) {
      Vec s = add(f, g);
      if (!is_zero(s)) pending.emplace(norm1(s), std::move(s));
    }
  };
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      Vec s = add(elements[a], elements[b]);
      if (!is_zero(s)) pending.emplace(norm1(s), std::move(s));
    }
  }

  while (!pending.empty()) {
    Vec s = pending.top().second;
    pending.pop();
    normal_form(s, elements);
    if (is_zero(s)) continue;
    for (const Vec& w : {s, neg(s)}) {
      if (!seen.insert(w).second) continue;
      push_pairs(w);
      elements.push_back(w);
    }
    if (elements.size() > max_elements) return std::nullopt;
  }

  std::vector<Vec> minimal;
  for (const auto& g : elements) {
    bool dominated = false;
    for (const auto& h : elements) {
      if (&h != &g && h != g && conformal_leq(h, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(g);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace genseq
