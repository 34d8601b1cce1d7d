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

#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>

using namespace genseq;
using Dec = boost::multiprecision::cpp_dec_float_100;

namespace {

// 100-digit decimal evaluation, independent of the library's interval code.
Dec to_dec(const Value& v) {
  Dec out = 0;
  const auto& r = v.basis()->radicands();
  for (std::size_t k = 0; k < r.size(); ++k) {
    const Rational& q = v.coeffs()[k];
    Dec c = Dec(q.get_num().get_str()) / Dec(q.get_den().get_str());
    out += c * boost::multiprecision::sqrt(Dec(r[k]));
  }
  return out;
}

}  // namespace

TEST_CASE("basis validation") {
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(51));
  CHECK_FALSE(is_squarefree(12));
  CHECK_THROWS_AS(make_basis({1, 4}), UsageError);
  CHECK_THROWS_AS(make_basis({1, 2, 2}), UsageError);
  auto b = make_basis({1, 2, 51});
  CHECK(b->size() == 3);
  CHECK(b->index_of(51) == 2u);
  CHECK_FALSE(b->index_of(3).has_value());
}

TEST_CASE("parsing and printing") {
  auto b = make_basis({1, 2, 51});
  Value v = parse_value("sqrt(51) - 5", b);
  CHECK(v.coeffs()[0] == Rational(-5));
  CHECK(v.coeffs()[2] == Rational(1));
  CHECK(parse_value("2*sqrt(2) + 3/2 - sqrt(2)", b) == parse_value("sqrt(2) + 3/2", b));
  CHECK(parse_value("0", b).is_zero());
  CHECK(parse_value("1", b).to_string() == "1");
  CHECK_THROWS_AS(parse_value("sqrt(3)", b), ParseError);
  CHECK_THROWS_AS(parse_value("2 *", b), ParseError);
  CHECK_THROWS_AS(parse_value("sqrt(2", b), ParseError);
  Value w = parse_value("7/3 - 2*sqrt(51)", b);
  CHECK(parse_value(w.to_string(), b) == w);
}

TEST_CASE("arithmetic") {
  auto b = make_basis({1, 2});
  Value a = parse_value("1 + sqrt(2)", b);
  Value c = parse_value("3 - 2*sqrt(2)", b);
  CHECK(a + c == parse_value("4 - sqrt(2)", b));
  CHECK(a - a == Value::zero(b));
  CHECK(a.scaled(Rational(1, 2)) == parse_value("1/2 + sqrt(2)/2", b));
  CHECK(-a == parse_value("-1 - sqrt(2)", b));
  CHECK_THROWS_AS(a + Value::zero(make_basis({1, 3})), UsageError);
}

TEST_CASE("signs near zero") {
  auto b = make_basis({1, 2, 51});
  // sqrt(51) - 5 - 1/10 is about 0.0414
  CHECK(sign(parse_value("sqrt(51) - 51/10", b)) == Sign::positive);
  // 99/70 approximates sqrt(2) from above by about 7.2e-5
  CHECK(sign(parse_value("sqrt(2) - 99/70", b)) == Sign::negative);
  // 1393/985 from below by about 3.6e-7
  CHECK(sign(parse_value("sqrt(2) - 1393/985", b)) == Sign::positive);
  CHECK(sign(parse_value("sqrt(2) - sqrt(2)", b)) == Sign::zero);
  CHECK(parse_value("5*sqrt(2) - 4", b) < parse_value("sqrt(51) - 5", b) + parse_value("1", b));
}

TEST_CASE("sign agrees with a 100-digit decimal oracle") {
  auto b = make_basis({1, 2, 3, 5, 51});
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 40);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Rational> q(b->size());
    for (auto& c : q) {
      c = Rational(num(rng), den(rng));
      c.canonicalize();
    }
    Value v(b, q);
    Dec d = to_dec(v);
    Sign expected = d > Dec("1e-80") ? Sign::positive : d < Dec("-1e-80") ? Sign::negative : Sign::zero;
    if (expected == Sign::zero) continue;  // ambiguous at this precision; not expected for random input
    CHECK(sign(v) == expected);
    ++checked;
  }
  CHECK(checked > 1900);
}

TEST_CASE("enclosure contains the value") {
  auto b = make_basis({1, 2, 51});
  Value v = parse_value("sqrt(51) - 5 + 3*sqrt(2)/7", b);
  auto [lo, hi] = v.enclosure(200);
  Dec d = to_dec(v);
  Dec dl = Dec(lo.get_num().get_str()) / Dec(lo.get_den().get_str());
  Dec dh = Dec(hi.get_num().get_str()) / Dec(hi.get_den().get_str());
  CHECK(dl <= d);
  CHECK(d <= dh);
  CHECK(hi - lo <= Rational(1) / (Rational(Integer(1) << 200)));
}

TEST_CASE("ordering in containers") {
  auto b = make_basis({1, 2});
  std::vector<Value> vs{parse_value("sqrt(2)", b), parse_value("1", b), parse_value("3/2", b)};
  std::sort(vs.begin(), vs.end(), ValueLess{});
  CHECK(vs[0] == parse_value("1", b));
  CHECK(vs[1] == parse_value("sqrt(2)", b));
  CHECK(vs[2] == parse_value("3/2", b));
}
