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

#include <genseq/grouplat.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace genseq {

// ---------------------------------------------------------------- PairVec

PairVec::PairVec(std::vector<std::int64_t> p, std::vector<std::int64_t> t) : p_(std::move(p)), t_(std::move(t)) {
  for (auto x : p_) {
    if (x < 0) throw UsageError("negative exponent in pair vector");
  }
  for (auto x : t_) {
    if (x < 0) throw UsageError("negative exponent in pair vector");
  }
  trim();
}

void PairVec::trim() {
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
  while (!t_.empty() && t_.back() == 0) t_.pop_back();
}

PairVec PairVec::p_unit(std::size_t k, std::int64_t mult) {
  if (k == 0) throw UsageError("indices start at 1");
  std::vector<std::int64_t> p(k, 0);
  p[k - 1] = mult;
  return PairVec(std::move(p), {});
}

PairVec PairVec::t_unit(std::size_t j, std::int64_t mult) {
  if (j == 0) throw UsageError("indices start at 1");
  std::vector<std::int64_t> t(j, 0);
  t[j - 1] = mult;
  return PairVec({}, std::move(t));
}

std::int64_t PairVec::degree() const {
  return std::accumulate(p_.begin(), p_.end(), std::int64_t{0}) + std::accumulate(t_.begin(), t_.end(), std::int64_t{0});
}

bool PairVec::leq(const PairVec& other) const {
  if (p_.size() > other.p_.size() || t_.size() > other.t_.size()) return false;
  for (std::size_t k = 0; k < p_.size(); ++k) {
    if (p_[k] > other.p_[k]) return false;
  }
  for (std::size_t k = 0; k < t_.size(); ++k) {
    if (t_[k] > other.t_[k]) return false;
  }
  return true;
}

namespace {

std::vector<std::int64_t> combine(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, int sign) {
  std::vector<std::int64_t> r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += sign * b[k];
  return r;
}

}  // namespace

PairVec PairVec::operator+(const PairVec& other) const {
  return PairVec(combine(p_, other.p_, 1), combine(t_, other.t_, 1));
}

PairVec PairVec::operator-(const PairVec& other) const {
  if (!other.leq(*this)) throw UsageError("pair vector subtraction would go negative");
  return PairVec(combine(p_, other.p_, -1), combine(t_, other.t_, -1));
}

std::vector<std::int64_t> PairVec::concat(std::size_t m, std::size_t i) const {
  if (p_.size() > m || t_.size() > i) throw UsageError("pair vector does not fit the requested shape");
  std::vector<std::int64_t> out(m + i, 0);
  std::copy(p_.begin(), p_.end(), out.begin());
  std::copy(t_.begin(), t_.end(), out.begin() + static_cast<std::ptrdiff_t>(m));
  return out;
}

PairVec PairVec::from_concat(const std::vector<std::int64_t>& ac, std::size_t m) {
  if (m > ac.size()) throw UsageError("bad split point");
  return PairVec(std::vector<std::int64_t>(ac.begin(), ac.begin() + static_cast<std::ptrdiff_t>(m)),
                 std::vector<std::int64_t>(ac.begin() + static_cast<std::ptrdiff_t>(m), ac.end()));
}

std::string PairVec::to_string(std::size_t m, std::size_t i) const {
  auto join = [](const std::vector<std::int64_t>& v, std::size_t width) {
    std::string s;
    for (std::size_t k = 0; k < std::max(v.size(), width); ++k) {
      if (k) s += ",";
      s += std::to_string(k < v.size() ? v[k] : 0);
    }
    return s;
  };
  return "(" + join(p_, m) + "|" + join(t_, i) + ")";
}

bool grlex_less(const PairVec& a, const PairVec& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  std::size_t m = std::max(a.p().size(), b.p().size());
  std::size_t i = std::max(a.t().size(), b.t().size());
  return a.concat(m, i) < b.concat(m, i);
}

// ----------------------------------------------------------- ObstacleSet

void ObstacleSet::add(PairVec vec, std::size_t stage, ObstacleOrigin origin) {
  members_.push_back({std::move(vec), stage, origin});
}

bool ObstacleSet::irreducible(const PairVec& v, std::size_t before_stage) const {
  for (const auto& o : members_) {
    if (o.stage < before_stage && o.vec.leq(v)) return false;
  }
  return true;
}

// ------------------------------------------------------------ group tools

Value value_of(const PairVec& v, const ChainValues& cv) {
  if (v.p().size() > cv.beta.size() || v.t().size() > cv.gamma.size()) {
    throw UsageError("pair vector " + v.to_string() + " refers to an unknown index");
  }
  Value out = Value::zero(cv.basis);
  for (std::size_t k = 0; k < v.p().size(); ++k) {
    if (v.p()[k]) out += cv.beta[k].scaled(v.p()[k]);
  }
  for (std::size_t j = 0; j < v.t().size(); ++j) {
    if (v.t()[j]) out += cv.gamma[j].scaled(v.t()[j]);
  }
  return out;
}

namespace {

Integer common_denominator(const std::vector<Value>& vals) {
  Integer d = 1;
  for (const auto& v : vals) {
    for (const auto& c : v.coeffs()) {
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
    }
  }
  return d;
}

IntVector scaled_row(const Value& v, const Integer& denom) {
  IntVector row;
  for (const auto& c : v.coeffs()) {
    Rational x = c * denom;
    if (x.get_den() != 1) throw UsageError("value not integral after scaling");
    row.push_back(x.get_num());
  }
  return row;
}

std::vector<Rational> scaled_target(const Value& v, const Integer& denom) {
  std::vector<Rational> out;
  for (const auto& c : v.coeffs()) out.push_back(c * denom);
  return out;
}

struct GroupSystem {
  Integer denom;
  IntegerLattice lattice;
};

GroupSystem make_group(const std::vector<Value>& gens, std::size_t dim) {
  Integer denom = common_denominator(gens);
  IntMatrix rows;
  for (const auto& g : gens) rows.push_back(scaled_row(g, denom));
  return {denom, IntegerLattice(rows, dim)};
}

void require_basis(const Value& alpha, const std::vector<Value>& gens) {
  for (const auto& g : gens) {
    if (!(*g.basis() == *alpha.basis())) throw UsageError("values over different radical bases");
  }
}

}  // namespace

bool is_commensurable(const Value& alpha, const std::vector<Value>& gens) {
  return min_multiple_in_group(alpha, gens).has_value();
}

Multiplicity min_multiple_in_group(const Value& alpha, const std::vector<Value>& gens) {
  require_basis(alpha, gens);
  if (alpha.is_zero()) return 1;
  GroupSystem sys = make_group(gens, alpha.basis()->size());
  auto x = sys.lattice.rational_coordinates(scaled_target(alpha, sys.denom));
  if (!x) return std::nullopt;
  Integer q = 1;
  for (const auto& c : *x) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), c.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw UsageError("multiplicity too large");
  return q.get_si();
}

std::optional<std::vector<Integer>> group_representation(const Value& alpha, const std::vector<Value>& gens) {
  require_basis(alpha, gens);
  if (gens.empty()) {
    if (alpha.is_zero()) return std::vector<Integer>{};
    return std::nullopt;
  }
  GroupSystem sys = make_group(gens, alpha.basis()->size());
  return sys.lattice.representation(scaled_target(alpha, sys.denom));
}

// -------------------------------------------------------- semigroup oracle

namespace {

using i128 = __int128;

constexpr std::int64_t kEntryLimit = std::int64_t{1} << 40;
constexpr std::uint64_t kRadicandLimit = std::uint64_t{1} << 24;

i128 det_bareiss(std::vector<std::vector<i128>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  i128 sign = 1;
  i128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

struct SemigroupOracle::Impl {
  std::size_t dim = 0;
  Integer denom;
  unsigned bits = 40;
  std::vector<std::vector<std::int64_t>> gen;  // scaled coefficient vectors
  std::vector<i128> gen_lo;                    // fixed-point lower bounds of the generator values
  std::vector<i128> sqrt_lo, sqrt_hi;          // fixed-point bounds of sqrt(r_k)
  std::vector<std::size_t> pivots;             // generators solved at the leaves
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> free;               // generators enumerated, largest first
  std::vector<std::vector<i128>> adj;          // adjugate of the pivot block
  i128 det = 1;
  std::set<std::pair<std::size_t, std::vector<std::int64_t>>> failed;

  i128 upper_value(const std::vector<std::int64_t>& v) const {
    i128 u = 0;
    for (std::size_t k = 0; k < dim; ++k) u += static_cast<i128>(v[k]) * (v[k] > 0 ? sqrt_hi[k] : sqrt_lo[k]);
    return u;
  }
  i128 lower_value(const std::vector<std::int64_t>& v) const {
    i128 u = 0;
    for (std::size_t k = 0; k < dim; ++k) u += static_cast<i128>(v[k]) * (v[k] > 0 ? sqrt_lo[k] : sqrt_hi[k]);
    return u;
  }

  bool solve_leaf(const std::vector<std::int64_t>& res, std::vector<std::int64_t>& counts) const {
    const std::size_t r = pivots.size();
    std::vector<i128> x(r, 0);
    for (std::size_t b = 0; b < r; ++b) {
      i128 acc = 0;
      for (std::size_t a = 0; a < r; ++a) acc += adj[b][a] * res[pivot_rows[a]];
      if (acc % det != 0) return false;
      x[b] = acc / det;
      if (x[b] < 0) return false;
    }
    for (std::size_t k = 0; k < dim; ++k) {
      i128 acc = 0;
      for (std::size_t b = 0; b < r; ++b) acc += x[b] * gen[pivots[b]][k];
      if (acc != res[k]) return false;
    }
    for (std::size_t b = 0; b < r; ++b) counts[pivots[b]] = static_cast<std::int64_t>(x[b]);
    return true;
  }

  bool search(std::size_t level, std::vector<std::int64_t>& res, std::vector<std::int64_t>& counts) {
    if (std::all_of(res.begin(), res.end(), [](std::int64_t v) { return v == 0; })) {
      for (std::size_t l = level; l < free.size(); ++l) counts[free[l]] = 0;
      for (auto p : pivots) counts[p] = 0;
      return true;
    }
    if (upper_value(res) < 0) return false;
    if (level == free.size()) return solve_leaf(res, counts);
    auto key = std::make_pair(level, res);
    if (failed.count(key)) return false;
    const std::size_t g = free[level];
    const i128 kmax = upper_value(res) / gen_lo[g];
    bool found = false;
    std::int64_t k = 0;
    for (; k <= kmax; ++k) {
      counts[g] = k;
      if (search(level + 1, res, counts)) {
        found = true;
        break;
      }
      for (std::size_t c = 0; c < dim; ++c) res[c] -= gen[g][c];
    }
    // restore the residual
    std::int64_t used = found ? k : k;
    for (std::size_t c = 0; c < dim; ++c) res[c] += used * gen[g][c];
    if (!found) failed.insert(std::move(key));
    return found;
  }
};

SemigroupOracle::SemigroupOracle(std::vector<Value> gens) : gens_(std::move(gens)), impl_(std::make_unique<Impl>()) {
  if (gens_.empty()) return;
  const BasisPtr& basis = gens_.front().basis();
  Impl& s = *impl_;
  s.dim = basis->size();
  for (const auto& g : gens_) {
    if (!(*g.basis() == *basis)) throw UsageError("values over different radical bases");
    if (sign(g) != Sign::positive) throw UsageError("semigroup generator " + g.to_string() + " is not positive");
  }
  for (auto r : basis->radicands()) {
    if (r >= kRadicandLimit) throw UsageError("radicand too large for semigroup search");
  }
  s.denom = common_denominator(gens_);
  for (const auto& g : gens_) {
    std::vector<std::int64_t> row;
    for (const auto& x : scaled_row(g, s.denom)) {
      if (!x.fits_slong_p() || abs(x) >= kEntryLimit) throw UsageError("value too large for semigroup search");
      row.push_back(x.get_si());
    }
    s.gen.push_back(std::move(row));
  }
  // Fixed-point precision: enough for every generator to have a positive lower bound.
  for (s.bits = 40;; s.bits += 8) {
    if (s.bits > 64) throw UsageError("generator too small for semigroup search");
    s.sqrt_lo.clear();
    s.sqrt_hi.clear();
    for (auto r : basis->radicands()) {
      Integer scaled = Integer(static_cast<unsigned long>(r)) << (2 * s.bits);
      Integer root = sqrt(scaled);
      bool exact = root * root == scaled;
      i128 lo = static_cast<i128>(root.get_ui());
      if (!root.fits_ulong_p()) throw UsageError("precision overflow");
      s.sqrt_lo.push_back(lo);
      s.sqrt_hi.push_back(exact ? lo : lo + 1);
    }
    s.gen_lo.clear();
    bool ok = true;
    for (const auto& g : s.gen) {
      s.gen_lo.push_back(s.lower_value(g));
      if (s.gen_lo.back() <= 0) ok = false;
    }
    if (ok) break;
  }
  // Pivots: independent generators of smallest value.
  std::vector<std::size_t> order(gens_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gens_[a] < gens_[b]; });
  IntMatrix chosen;
  std::size_t rank = 0;
  for (auto idx : order) {
    IntMatrix trial = chosen;
    IntVector row(s.gen[idx].begin(), s.gen[idx].end());
    trial.push_back(row);
    if (IntegerLattice(trial, s.dim).rank() > rank) {
      chosen = std::move(trial);
      ++rank;
      s.pivots.push_back(idx);
    } else {
      s.free.push_back(idx);
    }
  }
  std::reverse(s.free.begin(), s.free.end());
  IntegerLattice pivot_lattice(chosen, s.dim);
  s.pivot_rows = pivot_lattice.pivots();
  const std::size_t r = s.pivots.size();
  std::vector<std::vector<i128>> block(r, std::vector<i128>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) block[a][b] = s.gen[s.pivots[b]][s.pivot_rows[a]];
  }
  s.det = det_bareiss(block);
  s.adj.assign(r, std::vector<i128>(r, 0));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      // cofactor of block[a][b] goes to adj[b][a]
      std::vector<std::vector<i128>> minor;
      for (std::size_t rr = 0; rr < r; ++rr) {
        if (rr == a) continue;
        std::vector<i128> row;
        for (std::size_t cc = 0; cc < r; ++cc) {
          if (cc != b) row.push_back(block[rr][cc]);
        }
        minor.push_back(std::move(row));
      }
      i128 c = det_bareiss(minor);
      s.adj[b][a] = ((a + b) % 2 == 0) ? c : -c;
    }
  }
  if (s.det < 0) {
    s.det = -s.det;
    for (auto& row : s.adj) {
      for (auto& x : row) x = -x;
    }
  }
}

SemigroupOracle::~SemigroupOracle() = default;

std::optional<std::vector<std::int64_t>> SemigroupOracle::contains(const Value& alpha) const {
  if (alpha.is_zero()) return std::vector<std::int64_t>(gens_.size(), 0);
  if (gens_.empty()) return std::nullopt;
  if (!(*alpha.basis() == *gens_.front().basis())) throw UsageError("values over different radical bases");
  if (sign(alpha) == Sign::negative) return std::nullopt;
  std::vector<std::int64_t> res;
  for (const auto& c : alpha.coeffs()) {
    Rational x = c * impl_->denom;
    if (x.get_den() != 1) return std::nullopt;
    if (!x.get_num().fits_slong_p() || abs(x.get_num()) >= kEntryLimit) {
      throw UsageError("value too large for semigroup search");
    }
    res.push_back(x.get_num().get_si());
  }
  std::vector<std::int64_t> counts(gens_.size(), 0);
  std::lock_guard<std::mutex> lock(mutex_);
  if (!impl_->search(0, res, counts)) return std::nullopt;
  return counts;
}

std::optional<std::vector<std::int64_t>> semigroup_contains(const Value& alpha, const std::vector<Value>& gens) {
  return SemigroupOracle(gens).contains(alpha);
}

std::vector<std::size_t> minimal_semigroup_generators(const std::vector<Value>& gens) {
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::vector<Value> others;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k == j) continue;
      auto cmp = gens[k] <=> gens[j];
      if (cmp < 0 || (cmp == 0 && k < j)) others.push_back(gens[k]);
    }
    if (others.empty() || !semigroup_contains(gens[j], others)) kept.push_back(j);
  }
  return kept;
}

// ------------------------------------------------------- chain operations

std::vector<Value> chain_generators(const ChainValues& cv, std::size_t k, std::size_t i, bool skip_zero) {
  if (k > cv.beta.size() || i > cv.gamma.size()) throw UsageError("index beyond the constructed chain");
  std::vector<Value> out(cv.beta.begin(), cv.beta.begin() + static_cast<std::ptrdiff_t>(k));
  for (std::size_t j = 0; j < i; ++j) {
    if (skip_zero && cv.gamma[j].is_zero()) continue;
    out.push_back(cv.gamma[j]);
  }
  return out;
}

std::optional<std::size_t> min_p_level(const Value& alpha, const ChainValues& cv, std::size_t i) {
  for (std::size_t j = 1; j <= cv.beta.size(); ++j) {
    if (group_representation(alpha, chain_generators(cv, j, i, false))) return j;
  }
  return std::nullopt;
}

namespace {

std::size_t m_at(const ChainValues& cv, std::size_t i) {
  if (i >= cv.m.size()) throw UsageError("T_" + std::to_string(i) + " is not classified yet");
  return cv.m[i];
}

Integer residue(const Integer& b, std::int64_t q) {
  Integer r;
  Integer qq(static_cast<long>(q));
  mpz_fdiv_r(r.get_mpz_t(), b.get_mpz_t(), qq.get_mpz_t());
  return r;
}

std::int64_t to_i64(const Integer& x) {
  if (!x.fits_slong_p()) throw UsageError("coefficient too large");
  return x.get_si();
}

}  // namespace

SignedPair permissible_decompose(const Value& alpha, const ChainValues& cv, std::size_t k, std::size_t i) {
  if (k == 0) throw UsageError("k must be positive");
  const std::size_t m = std::max(k, m_at(cv, i));
  if (m > cv.beta.size()) throw UsageError("P-index beyond the constructed chain");
  SignedPair out{std::vector<Integer>(m, 0), std::vector<Integer>(i, 0)};
  Value cur = alpha;
  std::size_t kk = m;
  std::size_t ii = i;
  while (true) {
    auto rep = group_representation(cur, chain_generators(cv, kk, ii, false));
    if (!rep) throw UsageError("not in group");
    if (ii == 0 && kk == 1) {
      out.l[0] = (*rep)[0];
      break;
    }
    if (ii == 0 || kk > cv.m[ii]) {
      const Integer& b = (*rep)[kk - 1];
      const Multiplicity& q = cv.q[kk - 1];
      Integer l = q ? residue(b, *q) : b;
      out.l[kk - 1] = l;
      cur -= cv.beta[kk - 1].scaled(Rational(l));
      --kk;
    } else {
      const Integer& d = (*rep)[kk + ii - 1];
      const Multiplicity& s = cv.s[ii - 1];
      Integer n = s ? residue(d, *s) : d;
      out.n[ii - 1] = n;
      cur -= cv.gamma[ii - 1].scaled(Rational(n));
      --ii;
    }
  }
  return out;
}

PairVec irreducible_decompose(const Value& alpha, const ChainValues& cv, std::size_t k, std::size_t i) {
  if (k == 0) throw UsageError("k must be positive");
  if (i > cv.processed) throw UsageError("step " + std::to_string(i) + " has not been processed");
  const std::size_t m = std::max(k, m_at(cv, i));
  if (m > cv.beta.size()) throw UsageError("P-index beyond the constructed chain");
  std::vector<std::int64_t> l(m, 0);
  std::vector<std::int64_t> n(i, 0);
  Value cur = alpha;
  std::size_t kk = m;
  std::size_t ii = i;
  while (!(ii == 0 && kk == 1)) {
    if (ii == 0 || kk > cv.m[ii]) {
      auto w = semigroup_contains(cur, chain_generators(cv, kk, ii));
      if (!w) throw UsageError("not in semigroup");
      std::int64_t b = (*w)[kk - 1];
      const Multiplicity& q = cv.q[kk - 1];
      std::int64_t lk = q ? b % *q : b;
      l[kk - 1] = lk;
      cur -= cv.beta[kk - 1].scaled(lk);
      --kk;
    } else {
      std::int64_t nn = 0;
      if (!cv.zero_t[ii - 1]) {
        SemigroupOracle below(chain_generators(cv, kk, ii - 1));
        const Value& g = cv.gamma[ii - 1];
        Value rest = cur;
        while (true) {
          if (sign(rest) == Sign::negative) throw UsageError("not in semigroup");
          if (below.contains(rest)) break;
          rest -= g;
          ++nn;
        }
      }
      n[ii - 1] = nn;
      cur -= cv.gamma[ii - 1].scaled(nn);
      --ii;
    }
  }
  auto rep = group_representation(cur, {cv.beta[0]});
  if (!rep || sgn((*rep)[0]) < 0) throw UsageError("not in semigroup");
  l[0] = to_i64((*rep)[0]);
  return PairVec(std::move(l), std::move(n));
}

bool pushes(const PairVec& v, const ChainValues& cv, std::size_t i) {
  if (i == 0 || v.t_at(i) <= 0 || v.t().size() > i) return false;
  const std::size_t m = m_at(cv, i);
  if (v.p().size() > m) return false;
  Value rest = value_of(v, cv);
  return semigroup_contains(rest, chain_generators(cv, m, i - 1)).has_value();
}

namespace {

void sort_pushing(std::vector<PairVec>& members, const ChainValues& cv) {
  std::vector<std::pair<Value, PairVec>> keyed;
  for (auto& v : members) keyed.emplace_back(value_of(v, cv), std::move(v));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    auto c = a.first <=> b.first;
    if (c != 0) return c < 0;
    return grlex_less(a.second, b.second);
  });
  members.clear();
  for (auto& kv : keyed) members.push_back(std::move(kv.second));
}

std::vector<PairVec> keep_minimal(std::vector<PairVec> cands) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<PairVec> out;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
      dominated = b != a && cands[b].leq(cands[a]);
    }
    if (!dominated) out.push_back(cands[a]);
  }
  return out;
}

// Bounded breadth-first search by total degree over the free coordinates.
std::vector<PairVec> bounded_search(const ChainValues& cv, std::size_t i, const std::vector<std::size_t>& coords,
                                    std::size_t m, std::int64_t step, const PushingSearchLimits& limits) {
  const std::size_t n = coords.size();
  SemigroupOracle target(chain_generators(cv, m, i - 1));
  std::vector<PairVec> found;
  std::vector<std::int64_t> ac(n, 0);
  auto to_pair = [&](const std::vector<std::int64_t>& x) {
    std::vector<std::int64_t> full(m + i, 0);
    for (std::size_t c = 0; c < n; ++c) full[coords[c]] = x[c];
    return PairVec::from_concat(full, m);
  };
  for (std::int64_t deg = step; deg <= limits.degree_cap; ++deg) {
    for (std::int64_t t = 1; t <= limits.layer_cap && t * step <= deg; ++t) {
      std::int64_t rest = deg - t * step;
      // enumerate compositions of `rest` into the first n-1 coordinates
      std::vector<std::int64_t> x(n, 0);
      x[n - 1] = t * step;
      std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t left) {
        if (pos + 1 == n) {
          if (left != 0) return;
          PairVec v = to_pair(x);
          for (const auto& f : found) {
            if (f.leq(v)) return;
          }
          if (target.contains(value_of(v, cv))) found.push_back(v);
          return;
        }
        for (std::int64_t a = std::min(left, limits.coordinate_cap); a >= 0; --a) {
          x[pos] = a;
          rec(pos + 1, left - a);
        }
        x[pos] = 0;
      };
      rec(0, rest);
    }
  }
  return found;
}

}  // namespace

PushingSet minimal_pushing_set(const ChainValues& cv, std::size_t i, const PushingSearchLimits& limits) {
  if (i == 0 || i != cv.processed + 1) throw UsageError("pushing sets are computed in step order");
  if (i > cv.classified()) throw UsageError("T_" + std::to_string(i) + " is not classified yet");
  if (cv.zero_t[i - 1]) throw UsageError("T_" + std::to_string(i) + " is zero");
  const Multiplicity& s = cv.s[i - 1];
  if (!s) throw UsageError("value of T_" + std::to_string(i) + " is not commensurable");
  const std::size_t m = cv.m[i];

  // Coordinates whose unit vector is an obstacle never occur in irreducible vectors.
  std::vector<std::size_t> coords;
  for (std::size_t k = 1; k <= m; ++k) {
    if (cv.obstacles.irreducible(PairVec::p_unit(k), i)) coords.push_back(k - 1);
  }
  for (std::size_t j = 1; j < i; ++j) {
    if (cv.obstacles.irreducible(PairVec::t_unit(j), i)) coords.push_back(m + j - 1);
  }
  coords.push_back(m + i - 1);
  auto coord_value = [&](std::size_t c) { return c < m ? cv.beta[c] : cv.gamma[c - m]; };

  std::vector<Value> vals;
  for (auto c : coords) vals.push_back(coord_value(c));
  Integer denom = common_denominator(vals);
  IntMatrix rows;
  for (const auto& v : vals) rows.push_back(scaled_row(v, denom));
  IntegerLattice lattice(rows, cv.basis->size());

  PushingSet out;
  auto graver = graver_basis(lattice.relations(), limits.graver_max_elements);
  std::vector<PairVec> cands;
  if (graver) {
    out.method = "graver";
    for (const auto& g : *graver) {
      if (g.back() <= 0) continue;
      std::vector<std::int64_t> full(m + i, 0);
      for (std::size_t c = 0; c < coords.size(); ++c) full[coords[c]] = std::max<std::int64_t>(g[c], 0);
      cands.push_back(PairVec::from_concat(full, m));
    }
    cands = keep_minimal(std::move(cands));
  } else {
    out.method = "bounded-search";
    out.complete = false;
    cands = bounded_search(cv, i, coords, m, *s, limits);
  }
  for (auto& v : cands) {
    if (cv.obstacles.irreducible(v, i)) out.members.push_back(std::move(v));
  }
  sort_pushing(out.members, cv);
  return out;
}

}  // namespace genseq
