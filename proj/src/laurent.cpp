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

#include <genseq/laurent.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace genseq {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

VarList::VarList(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !ident_start(n[0]) || !std::all_of(n.begin(), n.end(), ident_char)) {
      throw UsageError("invalid variable name '" + n + "'");
    }
    if (!seen.insert(n).second) throw UsageError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return k;
  }
  return std::nullopt;
}

VarListPtr make_vars(std::vector<std::string> names) { return std::make_shared<const VarList>(std::move(names)); }

LaurentPoly::LaurentPoly(VarListPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw UsageError("polynomial without variable list");
}

LaurentPoly LaurentPoly::constant(const VarListPtr& vars, const Rational& c) {
  return monomial(vars, Exponents(vars->size(), 0), c);
}

LaurentPoly LaurentPoly::variable(const VarListPtr& vars, std::size_t index) {
  if (index >= vars->size()) throw UsageError("variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = 1;
  return monomial(vars, std::move(e));
}

LaurentPoly LaurentPoly::variable(const VarListPtr& vars, std::string_view name) {
  auto idx = vars->index_of(name);
  if (!idx) throw UsageError("unknown variable '" + std::string(name) + "'");
  return variable(vars, *idx);
}

LaurentPoly LaurentPoly::monomial(const VarListPtr& vars, Exponents exps, const Rational& coeff) {
  if (exps.size() != vars->size()) throw UsageError("exponent vector has wrong length");
  LaurentPoly p(vars);
  p.add_term(exps, coeff);
  return p;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void LaurentPoly::require_same_vars(const LaurentPoly& other) const {
  if (vars_ != other.vars_ && !(*vars_ == *other.vars_)) throw UsageError("polynomials over different variable lists");
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x < 0; })) return false;
  }
  return true;
}

std::int64_t LaurentPoly::total_degree() const {
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  r += other;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  r -= other;
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r(vars_);
  if (sgn(c) == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  require_same_vars(other);
  LaurentPoly r(vars_);
  Exponents e(vars_->size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(std::uint64_t e) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::inverse_monomial() const {
  if (!is_monomial()) throw UsageError("non-invertible substitution");
  const auto& [e, c] = *terms_.begin();
  Exponents neg(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) neg[k] = -e[k];
  return monomial(vars_, std::move(neg), Rational(1) / c);
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  require_same_vars(other);
  return terms_ == other.terms_;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string term = Rational(abs(c)).get_str();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      term += "*" + vars_->names()[k];
      if (e[k] != 1) term += "^" + std::to_string(e[k]);
    }
    if (out.empty()) {
      out = sgn(c) < 0 ? "-" + term : term;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

LaurentPoly substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images) {
  if (images.size() != f.vars()->size()) throw UsageError("one image per variable is required");
  if (images.empty()) throw UsageError("substitution into a polynomial without variables");
  const VarListPtr& target = images.front().vars();
  for (const auto& img : images) {
    if (!(*img.vars() == *target)) throw UsageError("substitution images over different variable lists");
  }
  std::map<std::pair<std::size_t, std::int64_t>, LaurentPoly> powers;
  auto power = [&](std::size_t var, std::int64_t e) -> const LaurentPoly& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    LaurentPoly p = e >= 0 ? images[var].pow(static_cast<std::uint64_t>(e))
                           : images[var].inverse_monomial().pow(static_cast<std::uint64_t>(-e));
    return powers.emplace(key, std::move(p)).first->second;
  };
  LaurentPoly out(target);
  for (const auto& [e, c] : f.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) term = term * power(k, e[k]);
    }
    out += term;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarListPtr& vars) : text_(text), vars_(vars) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  LaurentPoly expr() {
    LaurentPoly total(vars_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        ++pos_;
        sign = c == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      LaurentPoly t = term();
      total += sign < 0 ? -t : t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return total;
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        LaurentPoly d = power();
        if (!d.is_monomial()) throw ParseError(at, "division is only allowed by a single term");
        acc = acc * d.inverse_monomial();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly power() {
    std::size_t at = pos_;
    LaurentPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    std::int64_t e = exponent();
    if (e >= 0) return base.pow(static_cast<std::uint64_t>(e));
    if (!base.is_monomial()) throw ParseError(at, "negative power of a non-monomial");
    return base.inverse_monomial().pow(static_cast<std::uint64_t>(-e));
  }

  std::int64_t exponent() {
    bool paren = false;
    if (peek() == '(') {
      ++pos_;
      paren = true;
    }
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = text_[pos_++] == '-' ? -1 : 1;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected exponent");
    if (pos_ - start > 9) throw ParseError(start, "exponent too large");
    std::int64_t e = std::stoll(std::string(text_.substr(start, pos_ - start)));
    if (paren) {
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
    }
    return sign * e;
  }

  LaurentPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly::constant(vars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = vars_->index_of(name);
      if (!idx) throw ParseError(start, "unknown variable '" + std::string(name) + "'");
      return LaurentPoly::variable(vars_, *idx);
    }
    if (c == '\0') throw ParseError(pos_, "unexpected end of input");
    throw ParseError(pos_, "unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VarListPtr& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const VarListPtr& vars) { return PolyParser(text, vars).parse(); }

}  // namespace genseq
