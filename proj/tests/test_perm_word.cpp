//  Copyright 2026 The odolab Authors
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

#include <doctest.h>

#include "odolab/error.hpp"
#include "odolab/perm.hpp"
#include "odolab/word.hpp"

using namespace odolab;

TEST_CASE("perm basics") {
  const Perm id = Perm::identity(4);
  CHECK(id.is_identity());
  CHECK(id.degree() == 4);

  const Perm t = perm_from_cycle_string("(1 2)", 4);
  CHECK(t.apply(0) == 1);
  CHECK(t.apply(1) == 0);
  CHECK(t.apply(2) == 2);
  CHECK(compose(t, t).is_identity());
  CHECK(t.inverse() == t);
}

TEST_CASE("cycle parsing round trips") {
  for (const char* text : {"()", "(1 2)", "(1 2 3)", "(1 2 3)(4 5)",
                           "(1 5 4 3 2)"}) {
    const Perm p = perm_from_cycle_string(text, 5);
    CHECK(cycle_string_from_perm(p) == text);
    CHECK(perm_from_cycle_string(cycle_string_from_perm(p), 5) == p);
  }
}

TEST_CASE("cycle lists multiply left to right") {
  // Under the file convention, the one-line cycle list "(1 2)(2 3)" (two
  // cycles of one permutation would be disjoint, so build via composition)
  // means: apply (1 2) first. Internal compose applies its right argument
  // first, so the parsed product is compose(parse(second), parse(first)).
  const Perm a = perm_from_cycle_string("(1 2)", 3);
  const Perm b = perm_from_cycle_string("(2 3)", 3);
  const Perm left_to_right = compose(b, a);
  // (1 2) then (2 3): 1 -> 2 -> 3.
  CHECK(left_to_right.apply(0) == 2);
}

TEST_CASE("conjugation witness follows the file convention") {
  // (1 2)(3 4) conjugated by (5 4 3 2 1) reads as (2 3)(4 5) in files.
  const Perm lambda = perm_from_cycle_string("(1 2)(3 4)", 5);
  const Perm g = perm_from_cycle_string("(5 4 3 2 1)", 5);
  const Perm conj = compose(g, compose(lambda, g.inverse()));
  CHECK(cycle_string_from_perm(conj) == "(2 3)(4 5)");
}

TEST_CASE("malformed cycles are rejected") {
  CHECK_THROWS_AS(perm_from_cycle_string("(1 2", 3), Error);
  CHECK_THROWS_AS(perm_from_cycle_string("(1 1)", 3), Error);
  CHECK_THROWS_AS(perm_from_cycle_string("(1 9)", 3), Error);
}

TEST_CASE("words reduce freely") {
  const Word a = Word::generator(0);
  const Word b = Word::generator(1);
  CHECK((a * a.inverse()).empty());
  CHECK((a * b * b.inverse() * a).length() == 2);

  const Word w = a * b * a.inverse();
  const Word wi = w.inverse();
  CHECK((w * wi).empty());
  CHECK(wi.letters().front().gen == 0);
  CHECK(wi.letters().front().exp == 1);
}

TEST_CASE("letters carry unit exponents") {
  const Word w = Word::generator(2, -1) * Word::generator(2, -1);
  CHECK(w.length() == 2);
  for (const Letter& l : w.letters()) {
    CHECK(l.gen == 2);
    CHECK(l.exp == -1);
  }
}
