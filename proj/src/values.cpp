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

#include <genseq/values.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace genseq {

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

RadicalBasis::RadicalBasis(std::vector<std::uint64_t> radicands) : radicands_(std::move(radicands)) {
  if (radicands_.empty() || radicands_.front() != 1) {
    throw UsageError("radical basis must start with 1");
  }
  for (std::size_t k = 0; k < radicands_.size(); ++k) {
    if (!is_squarefree(radicands_[k])) {
      throw UsageError("radicand " + std::to_string(radicands_[k]) + " is not squarefree");
    }
    if (k > 0 && radicands_[k] <= radicands_[k - 1]) {
      throw UsageError("radicands must be distinct and sorted ascending");
    }
  }
}

std::optional<std::size_t> RadicalBasis::index_of(std::uint64_t radicand) const {
  auto it = std::lower_bound(radicands_.begin(), radicands_.end(), radicand);
  if (it == radicands_.end() || *it != radicand) return std::nullopt;
  return static_cast<std::size_t>(it - radicands_.begin());
}

BasisPtr make_basis(std::vector<std::uint64_t> radicands) {
  return std::make_shared<const RadicalBasis>(std::move(radicands));
}

Value::Value(BasisPtr basis, std::vector<Rational> coeffs) : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (!basis_) throw UsageError("value without basis");
  if (coeffs_.size() != basis_->size()) throw UsageError("coefficient count does not match basis");
  for (auto& c : coeffs_) c.canonicalize();
}

Value Value::zero(const BasisPtr& basis) { return Value(basis, std::vector<Rational>(basis->size())); }

Value Value::rational(const BasisPtr& basis, const Rational& q) {
  Value v = zero(basis);
  v.coeffs_[0] = q;
  return v;
}

Value Value::radical(const BasisPtr& basis, std::uint64_t radicand, const Rational& coeff) {
  auto idx = basis->index_of(radicand);
  if (!idx) throw UsageError("radicand " + std::to_string(radicand) + " not in basis");
  Value v = zero(basis);
  v.coeffs_[*idx] = coeff;
  return v;
}

bool Value::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

void Value::require_same_basis(const Value& other) const {
  if (basis_ != other.basis_ && !(*basis_ == *other.basis_)) {
    throw UsageError("values over different radical bases");
  }
}

Value& Value::operator+=(const Value& other) {
  require_same_basis(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Value& Value::operator-=(const Value& other) {
  require_same_basis(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

Value Value::operator+(const Value& other) const {
  Value r = *this;
  r += other;
  return r;
}

Value Value::operator-(const Value& other) const {
  Value r = *this;
  r -= other;
  return r;
}

Value Value::operator-() const {
  Value r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Value Value::scaled(const Rational& r) const {
  Value out = *this;
  for (auto& c : out.coeffs_) c *= r;
  return out;
}

bool Value::operator==(const Value& other) const {
  require_same_basis(other);
  return coeffs_ == other.coeffs_;
}

std::strong_ordering Value::operator<=>(const Value& other) const {
  switch (sign(*this - other)) {
    case Sign::negative:
      return std::strong_ordering::less;
    case Sign::positive:
      return std::strong_ordering::greater;
    default:
      return std::strong_ordering::equal;
  }
}

namespace {

// value * denom = sum numer[k] * sqrt(r_k), all integers.
struct IntegralForm {
  std::vector<Integer> numer;
  Integer denom = 1;
};

IntegralForm integral_form(const std::vector<Rational>& coeffs) {
  IntegralForm f;
  for (const auto& c : coeffs) {
    Integer d = c.get_den();
    mpz_lcm(f.denom.get_mpz_t(), f.denom.get_mpz_t(), d.get_mpz_t());
  }
  for (const auto& c : coeffs) f.numer.push_back(c.get_num() * (f.denom / c.get_den()));
  return f;
}

// Integer interval [lo, hi] containing 2^bits * value * denom.
std::pair<Integer, Integer> scaled_enclosure(const IntegralForm& f, const std::vector<std::uint64_t>& radicands,
                                             unsigned bits) {
  Integer lo = 0;
  Integer hi = 0;
  for (std::size_t k = 0; k < radicands.size(); ++k) {
    const Integer& n = f.numer[k];
    if (sgn(n) == 0) continue;
    Integer scaled = Integer(static_cast<unsigned long>(radicands[k])) << (2 * bits);
    Integer root = sqrt(scaled);
    bool exact = root * root == scaled;
    Integer up = exact ? root : root + 1;
    if (sgn(n) > 0) {
      lo += n * root;
      hi += n * up;
    } else {
      lo += n * up;
      hi += n * root;
    }
  }
  return {lo, hi};
}

}  // namespace

std::pair<Rational, Rational> Value::enclosure(unsigned bits) const {
  IntegralForm f = integral_form(coeffs_);
  // Each sqrt term contributes at most |n| / 2^bits of width; widen bits to cover the sum.
  Integer total = 0;
  for (const auto& n : f.numer) total += abs(n);
  unsigned extra = static_cast<unsigned>(mpz_sizeinbase(total.get_mpz_t(), 2)) + 1;
  auto [lo, hi] = scaled_enclosure(f, basis_->radicands(), bits + extra);
  Integer scale = Integer(1) << (bits + extra);
  Rational rlo(lo, scale * f.denom);
  Rational rhi(hi, scale * f.denom);
  rlo.canonicalize();
  rhi.canonicalize();
  return {rlo, rhi};
}

Sign sign(const Value& v) {
  if (v.is_zero()) return Sign::zero;
  IntegralForm f = integral_form(v.coeffs());
  // Nonzero by linear independence of square roots of distinct squarefree integers,
  // so some enclosure excludes 0.
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = scaled_enclosure(f, v.basis()->radicands(), bits);
    if (sgn(lo) > 0) return Sign::positive;
    if (sgn(hi) < 0) return Sign::negative;
  }
}

double Value::approx() const {
  auto [lo, hi] = enclosure(80);
  Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

std::string Value::decimal() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", approx());
  return buf;
}

std::string Value::to_string() const {
  std::string out;
  const auto& rad = basis_->radicands();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (k == 0) {
      term = mag.get_str();
    } else {
      std::string root = "sqrt(" + std::to_string(rad[k]) + ")";
      term = mag == 1 ? root : mag.get_str() + "*" + root;
    }
    if (out.empty()) {
      out = sgn(c) < 0 ? "-" + term : term;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class ValueParser {
 public:
  ValueParser(std::string_view text, const BasisPtr& basis) : text_(text), basis_(basis) {}

  Value parse() {
    Value total = Value::zero(basis_);
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      int sgn_term = 1;
      if (peek() == '+' || peek() == '-') {
        sgn_term = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      total += parse_term().scaled(sgn_term);
      first = false;
      skip_ws();
      if (pos_ >= text_.size()) break;
      if (peek() != '+' && peek() != '-') throw ParseError(pos_, "unexpected character '" + std::string(1, peek()) + "'");
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing input");
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  // term := factor (('*' | '/') factor)*, with at most one surviving radical.
  Value parse_term() {
    Rational coeff = 1;
    Integer radicand = 1;
    bool divide = false;
    while (true) {
      skip_ws();
      if (text_.substr(pos_, 4) == "sqrt") {
        std::size_t at = pos_;
        if (divide) throw ParseError(at, "division by a radical is not supported");
        pos_ += 4;
        skip_ws();
        if (get_if('(') == false) throw ParseError(pos_, "expected '('");
        Integer n = parse_integer();
        skip_ws();
        if (get_if(')') == false) throw ParseError(pos_, "expected ')'");
        if (sgn(n) <= 0) throw ParseError(at, "radicand must be positive");
        radicand *= n;
      } else {
        std::size_t at = pos_;
        Integer n = parse_integer();
        if (divide) {
          if (sgn(n) == 0) throw ParseError(at, "division by zero");
          coeff /= n;
        } else {
          coeff *= n;
        }
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        divide = false;
      } else if (peek() == '/') {
        ++pos_;
        divide = true;
      } else {
        break;
      }
    }
    // radicand = square^2 * free
    Integer square = 1;
    Integer free = radicand;
    for (Integer p = 2; p * p <= free; ++p) {
      while (free % (p * p) == 0) {
        free /= p * p;
        square *= p;
      }
    }
    coeff *= square;
    if (!free.fits_ulong_p()) throw ParseError(pos_, "radicand too large");
    auto idx = basis_->index_of(free.get_ui());
    if (!idx) throw ParseError(pos_, "radicand " + free.get_str() + " not in basis");
    Value v = Value::zero(basis_);
    std::vector<Rational> c(basis_->size());
    c[*idx] = coeff;
    return Value(basis_, std::move(c));
  }

  bool get_if(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }

  std::string_view text_;
  const BasisPtr& basis_;
  std::size_t pos_ = 0;
};

}  // namespace

Value parse_value(std::string_view text, const BasisPtr& basis) { return ValueParser(text, basis).parse(); }

}  // namespace genseq
