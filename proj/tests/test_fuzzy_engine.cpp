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

#include <algorithm>
#include <stdexcept>

#include "doctest.h"

#include "gsg/fuzzy.hpp"
#include "gsg/instances.hpp"
#include "gsg/theorems.hpp"

using namespace gsg;

namespace {

const Grade kHalf(1, 2);

}  // namespace

TEST_CASE("fuzzy subsets expose grades, support, and a stable rendering") {
  const FuzzySubset mu{Grade::one(), kHalf, Grade::zero()};
  CHECK(mu.size() == 3);
  CHECK(mu[0] == Grade::one());
  CHECK_FALSE(mu.empty_support());
  CHECK(mu.support() == ElementSubset::of(3, {0, 1}));
  CHECK(mu.str() == "[1 1/2 0]");

  CHECK(FuzzySubset(3).empty_support());
  CHECK(FuzzySubset::constant(2, kHalf).str() == "[1/2 1/2]");
}

TEST_CASE("meet and join are pointwise and demand equal carriers") {
  const FuzzySubset a{Grade::one(), kHalf};
  const FuzzySubset b{kHalf, Grade::one()};
  CHECK(fuzzy_meet(a, b) == FuzzySubset{kHalf, kHalf});
  CHECK(fuzzy_join(a, b) == FuzzySubset{Grade::one(), Grade::one()});
  CHECK(combine(LatticeOp::meet, a, b) == fuzzy_meet(a, b));
  CHECK_THROWS_AS(fuzzy_meet(a, FuzzySubset(3)), std::invalid_argument);
}

TEST_CASE("sup-min composition on the left-zero structure") {
  const auto LZ2 = make_left_zero(2, 1);
  const FuzzySubset mu{kHalf, Grade::one()};
  const FuzzySubset sigma{Grade::one(), Grade::zero()};
  // x = y g z iff y = x, so (mu o sigma)(x) = min(mu(x), max sigma).
  CHECK(compose(LZ2, mu, sigma) == FuzzySubset{kHalf, Grade::one()});
}

TEST_CASE("elements without factorizations compose to grade zero") {
  // x g y = 0 everywhere, so 1 = y g z has no solution.
  const GammaSemigroup Z(2, 1, {0, 0, 0, 0});
  const FuzzySubset mu{Grade::one(), Grade::one()};
  const auto c = compose(Z, mu, mu);
  CHECK(c[0] == Grade::one());
  CHECK(c[1] == Grade::zero());
}

TEST_CASE("composition is associative on a sample family") {
  const auto MOD3 = make_modular(3, {1, 2});
  const auto family = enumerate_fuzzy_family(MOD3, GradeGrid::standard());
  REQUIRE(family.members.size() == 26);
  for (std::size_t i = 0; i < family.members.size(); i += 5)
    for (std::size_t j = 1; j < family.members.size(); j += 7)
      for (std::size_t k = 2; k < family.members.size(); k += 9) {
        const auto& a = family.members[i];
        const auto& b = family.members[j];
        const auto& c = family.members[k];
        CHECK(compose(MOD3, compose(MOD3, a, b), c) ==
              compose(MOD3, a, compose(MOD3, b, c)));
      }
}

TEST_CASE("composition grades stay inside the generating grid") {
  const auto MOD3 = make_modular(3, {1, 2});
  const auto grid = GradeGrid::standard();
  const auto family = enumerate_fuzzy_family(MOD3, grid);
  for (std::size_t i = 0; i < family.members.size(); i += 3)
    for (std::size_t j = 0; j < family.members.size(); j += 4) {
      const auto c = compose(MOD3, family.members[i], family.members[j]);
      for (int x = 0; x < c.size(); ++x)
        CHECK(std::find(grid.levels().begin(), grid.levels().end(), c[x]) !=
              grid.levels().end());
    }
}

TEST_CASE("characteristic functions bridge subsets and fuzzy subsets") {
  const auto chi = characteristic(ElementSubset::of(3, {0, 2}));
  CHECK(chi == FuzzySubset{Grade::one(), Grade::zero(), Grade::one()});
  CHECK(characteristic(ElementSubset(2)).empty_support());
}

TEST_CASE("fuzzy left ideals of the modular structure have the known shape") {
  const auto MOD3 = make_modular(3, {1, 2});
  // Multiplying anything lands on a product value, so mu must weight its
  // possible products at least as much as each right factor: (b, a, a), b>=a.
  CHECK(check_fuzzy(MOD3, IdealKind::left, {Grade::one(), kHalf, kHalf}));
  CHECK(check_fuzzy(MOD3, IdealKind::left,
                    {Grade::one(), Grade::one(), Grade::one()}));
  CHECK_FALSE(check_fuzzy(MOD3, IdealKind::left,
                          {kHalf, Grade::one(), kHalf}));

  const auto violation = fuzzy_violation(
      MOD3, IdealKind::left, FuzzySubset{kHalf, Grade::one(), kHalf});
  REQUIRE(violation.has_value());
  CHECK(violation->find("mu(") != std::string::npos);

  CHECK_THROWS_AS(check_fuzzy(MOD3, IdealKind::left, FuzzySubset(3)),
                  std::invalid_argument);
}

TEST_CASE("one-sided predicates match their composition forms") {
  const auto MOD3 = make_modular(3, {1, 2});
  const auto chi = characteristic(ElementSubset::full(3));
  for (const auto& mu :
       enumerate_fuzzy_family(MOD3, GradeGrid::standard()).members) {
    CHECK(check_fuzzy(MOD3, IdealKind::left, mu) ==
          leq(compose(MOD3, chi, mu), mu));
    CHECK(check_fuzzy(MOD3, IdealKind::right, mu) ==
          leq(compose(MOD3, mu, chi), mu));
  }
}

TEST_CASE("quasi predicate agrees with both factorization-pair forms") {
  const auto MOD3 = make_modular(3, {1, 2});
  for (const auto& mu :
       enumerate_fuzzy_family(MOD3, GradeGrid::standard()).members) {
    const bool q = check_fuzzy(MOD3, IdealKind::quasi, mu);
    CHECK(q == check_fuzzy_quasi_pointwise(MOD3, mu,
                                           QuasiPointwiseVariant::min_form));
    CHECK(q == check_fuzzy_quasi_pointwise(
                   MOD3, mu, QuasiPointwiseVariant::maxmin_form));
  }
}

TEST_CASE("level sets cut at attained grades") {
  const FuzzySubset mu{Grade::one(), kHalf, Grade::zero()};
  CHECK(level_set(mu, Grade::one()) == ElementSubset::of(3, {0}));
  CHECK(level_set(mu, kHalf) == ElementSubset::of(3, {0, 1}));
  CHECK(level_set(mu, Grade::zero()) == ElementSubset::full(3));
  CHECK(level_set(mu, Grade(3, 4)) == ElementSubset::of(3, {0}));

  const auto values = image_values(mu);
  REQUIRE(values.size() == 3);
  CHECK(values[0] == Grade::zero());
  CHECK(values[1] == kHalf);
  CHECK(values[2] == Grade::one());
  CHECK(image_values(FuzzySubset::constant(4, kHalf)).size() == 1);
}

TEST_CASE("pointwise powers and the order relation") {
  const FuzzySubset mu{kHalf, Grade::one()};
  CHECK(power(mu, 2) == FuzzySubset{Grade(1, 4), Grade::one()});
  CHECK(power(mu, 0) == FuzzySubset::constant(2, Grade::one()));
  CHECK(leq(power(mu, 2), mu));
  CHECK(leq(mu, mu));
  CHECK_FALSE(leq(mu, power(mu, 2)));
}

TEST_CASE("grade grids validate their chains") {
  const auto grid = GradeGrid::standard();
  REQUIRE(grid.size() == 3);
  CHECK(grid.levels()[0] == Grade::zero());
  CHECK(grid.levels()[1] == kHalf);
  CHECK(grid.levels()[2] == Grade::one());

  CHECK(GradeGrid::complete_for(3).size() == 4);
  CHECK(GradeGrid::uniform(5).levels()[1] == Grade(1, 4));

  CHECK_THROWS_AS(GradeGrid({Grade::zero()}), std::invalid_argument);
  CHECK_THROWS_AS(GradeGrid({kHalf, Grade::one()}), std::invalid_argument);
  CHECK_THROWS_AS(GradeGrid({Grade::zero(), kHalf}), std::invalid_argument);
  CHECK_THROWS_AS(GradeGrid({Grade::zero(), Grade::one(), kHalf}),
                  std::invalid_argument);
}
