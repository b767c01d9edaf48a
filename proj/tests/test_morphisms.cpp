/*
 *   Copyright 2026 The gammasg Authors
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

#include <stdexcept>

#include "doctest.h"

#include "gsg/fuzzy.hpp"
#include "gsg/instances.hpp"
#include "gsg/morphisms.hpp"
#include "gsg/theorems.hpp"

using namespace gsg;

namespace {

const Grade kHalf(1, 2);

}  // namespace

TEST_CASE("squaring is not a structure map on the modular instance") {
  const auto MOD3 = make_modular(3, {1, 2});
  const auto v = validate_hom(MOD3, MOD3, {0, 1, 1});
  CHECK(v.errors.empty());
  REQUIRE_FALSE(v.violations.empty());
  const auto& first = v.violations[0];
  // f(1 g 1) with g valued 2 gives f(2) = 1, but f(1) g f(1) = 2.
  CHECK(first.x == 1);
  CHECK(first.gamma == 1);
  CHECK(first.y == 1);
  CHECK(first.image_of_product == 1);
  CHECK(first.product_of_images == 2);
  CHECK_FALSE(v.ok());
}

TEST_CASE("map validation reports arity, range, and parameter mismatches") {
  const auto MOD3 = make_modular(3, {1, 2});
  const auto LZ2 = make_left_zero(2, 1);

  CHECK_FALSE(validate_hom(MOD3, MOD3, {0, 1}).errors.empty());
  CHECK_FALSE(validate_hom(MOD3, MOD3, {0, 1, 5}).errors.empty());
  CHECK_FALSE(validate_hom(MOD3, LZ2, {0, 1, 1}).errors.empty());
}

TEST_CASE("endomorphism enumeration is exact on known instances") {
  const auto MOD3 = make_modular(3, {1, 2});
  const auto endos = enumerate_endomorphisms(MOD3);
  REQUIRE(endos.size() == 2);
  CHECK(endos[0].map == std::vector<int>{0, 0, 0});
  CHECK(endos[1].map == std::vector<int>{0, 1, 2});
  CHECK_FALSE(endos[0].surjective);
  CHECK(endos[1].surjective);

  // Every self-map of a left-zero structure is a structure map.
  CHECK(enumerate_endomorphisms(make_left_zero(2, 1)).size() == 4);

  CHECK_THROWS_AS(enumerate_endomorphisms(make_left_zero(9, 1)),
                  std::logic_error);
}

TEST_CASE("surjective endomorphisms of finite carriers are bijections") {
  for (const auto& G : enumerate_all(2, 2))
    for (const auto& f : enumerate_endomorphisms(G))
      if (f.surjective) {
        ElementSubset image(G.size());
        for (int v : f.map) image.insert(v);
        CHECK(image.count() == G.size());
      }
}

TEST_CASE("pullback composes grades through the map") {
  const auto LZ2 = make_left_zero(2, 1);
  const auto v = validate_hom(LZ2, LZ2, {1, 0});
  REQUIRE(v.ok());
  const FuzzySubset lambda{kHalf, Grade::one()};
  CHECK(pullback(*v.hom, lambda) == FuzzySubset{Grade::one(), kHalf});
}

TEST_CASE("pushforward takes suprema over fibers") {
  const auto LZ2 = make_left_zero(2, 1);
  const auto swap = validate_hom(LZ2, LZ2, {1, 0});
  REQUIRE(swap.ok());
  const FuzzySubset mu{kHalf, Grade::one()};
  CHECK(pushforward(*swap.hom, mu) == FuzzySubset{Grade::one(), kHalf});

  const auto collapse = validate_hom(LZ2, LZ2, {0, 0});
  REQUIRE(collapse.ok());
  CHECK_THROWS_AS(pushforward(*collapse.hom, mu), std::invalid_argument);
}

TEST_CASE("reduction mod 2 is a surjection between modular instances") {
  const auto MOD4 = make_modular(4, {1});
  const auto MOD2 = make_modular(2, {1});
  const auto v = validate_hom(MOD4, MOD2, {0, 1, 0, 1});
  REQUIRE(v.ok());
  CHECK(v.hom->surjective);

  // Fibers {0,2} and {1,3} take maxima independently.
  const FuzzySubset mu{Grade::zero(), kHalf, Grade(1, 4), Grade::one()};
  CHECK(pushforward(*v.hom, mu) == FuzzySubset{Grade(1, 4), Grade::one()});

  // Any map between left-zero structures is a structure map.
  const auto LZ3 = make_left_zero(3, 1);
  const auto LZ2 = make_left_zero(2, 1);
  CHECK(validate_hom(LZ3, LZ2, {0, 1, 0}).ok());
  CHECK(validate_hom(LZ3, LZ2, {1, 1, 1}).ok());
}

TEST_CASE("pushforward distributes over meets with pulled-back factors") {
  const auto MOD4 = make_modular(4, {1});
  const auto MOD2 = make_modular(2, {1});
  const auto v = validate_hom(MOD4, MOD2, {0, 1, 0, 1});
  REQUIRE(v.ok());

  const auto grid = GradeGrid::standard();
  const auto source_family = enumerate_fuzzy_family(MOD4, grid);
  const auto target_family = enumerate_fuzzy_family(MOD2, grid);
  for (std::size_t i = 0; i < source_family.members.size(); i += 7)
    for (const auto& lambda : target_family.members) {
      const auto& mu = source_family.members[i];
      CHECK(pushforward(*v.hom, fuzzy_meet(pullback(*v.hom, lambda), mu)) ==
            fuzzy_meet(lambda, pushforward(*v.hom, mu)));
    }
}

TEST_CASE("endomorphism transport preserves ideal kinds on the corpus") {
  const auto MOD3 = make_modular(3, {1, 2});
  const auto family = enumerate_fuzzy_family(MOD3, GradeGrid::standard());
  for (const auto& theta : enumerate_endomorphisms(MOD3))
    for (const auto& mu : family.members)
      for (IdealKind kind : {IdealKind::subsemigroup, IdealKind::bi}) {
        if (!check_fuzzy(MOD3, kind, mu)) continue;
        const auto back = endo_transport(theta, mu);
        if (!back.empty_support()) CHECK(check_fuzzy(MOD3, kind, back));
      }
}
