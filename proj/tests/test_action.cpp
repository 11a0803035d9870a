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

#include <set>
#include <string>

#include "helpers.hpp"
#include "odolab/error.hpp"
#include "odolab/tower.hpp"

using namespace odolab;
using namespace testutil;

TEST_CASE("stabilizer and coset action round trip") {
  const GroupCtxPtr ctx = s3();
  const CosetTable t = table_from_cycles(ctx, {"(1 2)"});
  const FiniteMinimalAction x = coset_action_of(t);
  CHECK(x.degree == 3);
  CHECK(stabilizer(x, 0) == t);
  CHECK_THROWS_AS(stabilizer(x, 7), Error);
}

TEST_CASE("tiles through a point") {
  const GroupCtxPtr ctx = s3();
  const FiniteMinimalAction x =
      coset_action_of(table_from_cycles(ctx, {"(1 2)"}));
  const auto tiles = tiles_through(x, 0);
  REQUIRE(tiles.size() == 2);
  CHECK(tiles[0] == std::vector<int>{0});
  CHECK(tiles[1] == std::vector<int>{0, 1, 2});

  const GroupCtxPtr z = free_z();
  // In the canonical numbering of Z/4 the index-2 block through 0 is {0, 3}.
  const auto ztiles = tiles_through(coset_action_of(nz(z, 4)), 0);
  REQUIRE(ztiles.size() == 3);
  CHECK(ztiles[1] == std::vector<int>{0, 3});
}

TEST_CASE("hitting subgroups of tiles") {
  const GroupCtxPtr z = free_z();
  const FiniteMinimalAction x = coset_action_of(nz(z, 4));
  CHECK(hitting_subgroup(x, 0, {0, 3}) == nz(z, 2));
  CHECK(hitting_subgroup(x, 0, {0}) == nz(z, 4));
  CHECK(hitting_subgroup(x, 0, {0, 1, 2, 3}).index() == 1);
  CHECK_THROWS_AS(hitting_subgroup(x, 0, {0, 1}), Error);  // not a tile
  CHECK_THROWS_AS(hitting_subgroup(x, 0, {1, 2}), Error);  // misses point
}

TEST_CASE("local and global eigensets") {
  const GroupCtxPtr ctx = s3();
  const CosetTable t = table_from_cycles(ctx, {"(1 2)"});
  const FiniteMinimalAction x = coset_action_of(t);
  CHECK(eig_x(x, 0).size() == 2);
  CHECK(eig_x(x, 0) == overgroups(t));

  const Eigenset e = eig(x);
  CHECK(eigen_equal(e, Eigenset(t)));
  const HullEnum hull = eigenhull_enum(t);
  CHECK(hull.subgroups.size() == 4);
  CHECK(hull.classes.size() == 2);
  // Eig is independent of the base point at the class level.
  for (int p = 1; p < x.degree; ++p) {
    CHECK(eigen_equal(Eigenset(stabilizer(x, p)), e));
  }
}

TEST_CASE("subodometer of a scale with explicit witness") {
  const GroupCtxPtr z = free_z();
  const FiniteScale s = FiniteScale::directify({nz(z, 4), nz(z, 6)});
  const Subodometer sub = s_subodometer(s);
  CHECK(sub.action.degree == 12);

  const FiniteMinimalAction target = coset_action_of(s.minimum());
  // witness is an equivariant bijection orbit -> target.
  std::set<int> image(sub.witness.begin(), sub.witness.end());
  CHECK(static_cast<int>(image.size()) == sub.action.degree);
  CHECK(sub.witness[0] == 0);
  for (int p = 0; p < sub.action.degree; ++p) {
    for (int i = 0; i < z->rank(); ++i) {
      CHECK(sub.witness[sub.action.apply(i, p)] ==
            target.apply(i, sub.witness[p]));
    }
  }
}

TEST_CASE("maximal odometer factor") {
  const GroupCtxPtr ctx = s5();
  const CosetTable l2 = table_from_cycles(ctx, {"(1 2 3)"});
  const FiniteMinimalAction mof =
      maximal_odometer_factor(coset_action_of(l2));
  CHECK(mof.degree == 2);  // G over the alternating subgroup
  CHECK(is_normal(stabilizer(mof, 0)));

  // Idempotence up to conjugacy.
  const FiniteMinimalAction again = maximal_odometer_factor(mof);
  CHECK(stabilizer(again, 0) == stabilizer(mof, 0));
}

TEST_CASE("maximal subodometer factor of an eigenset") {
  const GroupCtxPtr z = free_z();
  const Eigenset e(nz(z, 6));
  CHECK(maximal_subodometer_factor_of(e).degree == 6);
}

TEST_CASE("enveloping odometer and ellis agree") {
  const GroupCtxPtr ctx3 = s3();
  const CosetTable t = table_from_cycles(ctx3, {"(1 2)"});
  const FiniteMinimalAction x = coset_action_of(t);
  const FiniteMinimalAction env = enveloping_odometer(x);
  const FiniteMinimalAction ell = ellis(x);
  CHECK(env.degree == 6);
  CHECK(ell.degree == 6);
  CHECK(stabilizer(ell, 0) == stabilizer(env, 0));
  CHECK(stabilizer(env, 0) == normal_core(t));

  const GroupCtxPtr ctx5 = s5();
  const CosetTable g2 =
      table_from_cycles(ctx5, {"(1 2 3)", "(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(enveloping_odometer(coset_action_of(g2)).degree == 120);
}

TEST_CASE("universal truncation") {
  // Realized S3, max index 6: the intersection of S3, A3 and the trivial
  // subgroup is trivial, so the regular 6-point action.
  CHECK(universal_truncation(s3(), 6).degree == 6);
  // Free rank 1, max index 4: Z/12.
  CHECK(universal_truncation(free_z(), 4).degree == 12);
}

TEST_CASE("low-index enumeration over a free context") {
  const auto tables = enumerate_pointed_actions(free_z(), 4);
  REQUIRE(tables.size() == 4);  // nZ for n = 1..4
  for (const CosetTable& t : tables) {
    CHECK(t == nz(free_z(), t.index()));
  }

  // Rank 2: index-2 subgroups of F2 are the kernels of the three nonzero
  // maps to Z/2, so degree <= 2 gives 1 + 3 tables.
  const auto f2 = std::make_shared<const GroupCtx>(
      "F2", std::vector<std::string>{"a", "b"});
  CHECK(enumerate_pointed_actions(f2, 2).size() == 4);
  const auto c3 = std::make_shared<const GroupCtx>(
      "C3", std::vector<std::string>{"g"},
      std::vector<Word>{Word({{0, 1}, {0, 1}, {0, 1}})});
  CHECK_THROWS_AS(enumerate_pointed_actions(c3, 3), Error);  // not free
}

TEST_CASE("factor relations between actions") {
  const GroupCtxPtr z = free_z();
  const FiniteMinimalAction four = coset_action_of(nz(z, 4));
  const FiniteMinimalAction two = coset_action_of(nz(z, 2));
  CHECK(factor_exists(four, 0, two, 0));
  CHECK_FALSE(factor_exists(two, 0, four, 0));
  CHECK(count_factor_maps(four, two) == 2);
  CHECK(conjugate_actions(four, 1, four, 3));
  CHECK_FALSE(conjugate_actions(four, 0, two, 0));
}

TEST_CASE("towers compose and export") {
  const GroupCtxPtr z = free_z();
  const ChainStream chain([z](int n) { return nz(z, 1 << (n - 1)); });
  const Tower t = tower(chain, 4);
  CHECK(t.indices() == std::vector<int>{1, 2, 4, 8});
  REQUIRE(t.maps.size() == 3);

  // Skip-level composition equals the composed maps.
  const auto skip = factor_map(t.levels[2], t.levels[0]);
  REQUIRE(skip.has_value());
  for (int p = 0; p < t.levels[2].index(); ++p) {
    CHECK(skip->point_map[p] == t.maps[0].point_map[t.maps[1].point_map[p]]);
  }

  const std::string dot = tower_to_dot(t);
  CHECK(dot.find("digraph tower") != std::string::npos);
  CHECK(dot.find("\"4:7\" -> \"3:0\"") != std::string::npos);

  // A non-nested producer fails at tower construction.
  const ChainStream broken([z](int n) { return nz(z, n == 2 ? 3 : 2); });
  CHECK_THROWS_AS(tower(broken, 2), Error);
}
