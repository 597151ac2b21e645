//  Copyright 2026 The relind Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <relind/errors.hpp>
#include <relind/proposition.hpp>

#include <doctest.h>

#include <array>

using namespace relind;

namespace {
constexpr Truth F = Truth::False;
constexpr Truth I = Truth::Indeterminate;
constexpr Truth T = Truth::True;
}  // namespace

TEST_SUITE("proposition") {

TEST_CASE("strong Kleene tables") {
  CHECK(kleene_not(I) == I);
  CHECK(kleene_not(T) == F);
  CHECK(kleene_and(F, I) == F);
  CHECK(kleene_and(T, I) == I);
  CHECK(kleene_or(T, I) == T);
  CHECK(kleene_or(F, I) == I);
  CHECK(kleene_xor(T, I) == I);
  CHECK(kleene_xor(T, T) == F);
  CHECK(kleene_equals(F, F) == T);
  CHECK(kleene_equals(I, I) == I);
  CHECK(kleene_equals(T, F) == F);
}

TEST_CASE("connective arity") {
  const std::array<Truth, 1> one{T};
  const std::array<Truth, 3> three{T, T, I};
  CHECK(kleene_connective(Connective::Not, one) == F);
  CHECK(kleene_connective(Connective::And, three) == I);
  CHECK(kleene_connective(Connective::Or, three) == T);
  CHECK_THROWS_AS(kleene_connective(Connective::And, one), ArityError);
  CHECK_THROWS_AS(kleene_connective(Connective::Not, three), ArityError);
  CHECK_THROWS_AS(Proposition::compound(Connective::Xor, {Proposition::atom("a", 0)}), ArityError);
}

TEST_CASE("parse and print") {
  const auto p = Proposition::parse("a=1 ^ b=1");
  CHECK(p.to_string() == "(a=1 ^ b=1)");
  CHECK(p.variables() == std::set<std::string>{"a", "b"});
  CHECK(Proposition::parse(p.to_string()) == p);
  const auto q = Proposition::parse("!(a=0 | b=1) & c=0 <-> d=1");
  CHECK(q.to_string() == "((!(a=0 | b=1) & c=0) <-> d=1)");
  CHECK(Proposition::parse(q.to_string()) == q);
  CHECK(Proposition::parse("x_2=0").as_atom().variable == "x_2");
}

TEST_CASE("parse errors carry an offset") {
  CHECK_THROWS_AS(Proposition::parse(""), PropositionParseError);
  CHECK_THROWS_AS(Proposition::parse("a=2"), PropositionParseError);
  CHECK_THROWS_AS(Proposition::parse("(a=1"), PropositionParseError);
  try {
    Proposition::parse("a=1 & ");
    FAIL("expected a parse error");
  } catch (const PropositionParseError& e) {
    CHECK(e.offset() == 6);
  }
}

}
