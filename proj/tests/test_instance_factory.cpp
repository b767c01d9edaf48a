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
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "gsg/gamma_semigroup.hpp"
#include "gsg/instances.hpp"

using namespace gsg;

namespace {

// Deliberately naive re-implementation used to cross-check the enumerator:
// generates every table and tests associativity with its own loops.
std::vector<std::vector<int>> naive_associative_tables(int n, int m) {
  const int entries = n * n * m;
  std::vector<std::vector<int>> found;
  std::vector<int> t(static_cast<std::size_t>(entries), 0);
  const auto at = [&](int x, int g, int y) {
    return t[static_cast<std::size_t>((x * m + g) * n + y)];
  };
  for (;;) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int b = 0; b < m && ok; ++b)
        for (int y = 0; y < n && ok; ++y)
          for (int g = 0; g < m && ok; ++g)
            for (int z = 0; z < n && ok; ++z)
              ok = at(at(x, b, y), g, z) == at(x, b, at(y, g, z));
    if (ok) found.push_back(t);
    int i = entries - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - 1)
      t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return found;
}

// Brute-force isomorphism test: try every relabeling of elements and of
// parameters.
bool isomorphic(const GammaSemigroup& A, const GammaSemigroup& B) {
  if (A.size() != B.size() || A.gamma_size() != B.gamma_size()) return false;
  std::vector<int> sigma(static_cast<std::size_t>(A.size()));
  std::vector<int> tau(static_cast<std::size_t>(A.gamma_size()));
  for (int i = 0; i < A.size(); ++i) sigma[static_cast<std::size_t>(i)] = i;
  do {
    for (int g = 0; g < A.gamma_size(); ++g)
      tau[static_cast<std::size_t>(g)] = g;
    do {
      bool match = true;
      for (int x = 0; x < A.size() && match; ++x)
        for (int g = 0; g < A.gamma_size() && match; ++g)
          for (int y = 0; y < A.size() && match; ++y)
            match = sigma[static_cast<std::size_t>(A.product(x, g, y))] ==
                    B.product(sigma[static_cast<std::size_t>(x)],
                              tau[static_cast<std::size_t>(g)],
                              sigma[static_cast<std::size_t>(y)]);
      if (match) return true;
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace

TEST_CASE("named constructors produce the advertised structures") {
  const auto LZ = make_left_zero(3, 2);
  for (int x = 0; x < 3; ++x)
    for (int g = 0; g < 2; ++g)
      for (int y = 0; y < 3; ++y) CHECK(LZ.product(x, g, y) == x);
  CHECK(classify(LZ).left_zero);

  const auto RZ = make_right_zero(2, 1);
  CHECK(classify(RZ).right_zero);

  const auto MOD3 = make_modular(3, {1, 2});
  CHECK(MOD3.product(1, 1, 2) == 1);  // 1*2*2 mod 3
  CHECK(MOD3.gamma_size() == 2);

  // Lifting the two-element right-zero semigroup keeps its character.
  const auto lifted = make_lift(2, {0, 1, 0, 1}, 3);
  CHECK(lifted.gamma_size() == 3);
  CHECK(classify(lifted).right_zero);

  InstanceSpec spec;
  spec.kind = InstanceSpec::Kind::modular;
  spec.n = 5;
  spec.gammas = {1, 4};
  CHECK(make_instance(spec).size() == 5);
}

TEST_CASE("constructor parameters are validated") {
  CHECK_THROWS_AS(make_left_zero(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_modular(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_modular(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(make_modular(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_lift(2, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("modular structures over a prime with unit parameters are regular") {
  CHECK(classify(make_modular(3, {1, 2})).regular);
  CHECK(classify(make_modular(5, {1, 2, 3, 4})).regular);
  CHECK(classify(make_modular(7, {2})).regular);
}

TEST_CASE("exhaustive enumeration matches a naive recount") {
  const auto two = enumerate_all(2, 1);
  const auto naive_two = naive_associative_tables(2, 1);
  REQUIRE(two.size() == 8);
  REQUIRE(naive_two.size() == 8);
  for (std::size_t i = 0; i < two.size(); ++i)
    CHECK(two[i].table() == naive_two[i]);

  const auto three = enumerate_all(3, 1);
  const auto naive_three = naive_associative_tables(3, 1);
  REQUIRE(three.size() == 113);
  REQUIRE(naive_three.size() == 113);
  for (std::size_t i = 0; i < three.size(); ++i)
    CHECK(three[i].table() == naive_three[i]);

  CHECK(enumerate_all(2, 2).size() == naive_associative_tables(2, 2).size());
}

TEST_CASE("exhaustive order is ascending lexicographic") {
  const auto all = enumerate_all(2, 2);
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(std::lexicographical_compare(all[i - 1].table().begin(),
                                       all[i - 1].table().end(),
                                       all[i].table().begin(),
                                       all[i].table().end()));
}

TEST_CASE("one-element carriers admit exactly one structure") {
  CHECK(enumerate_all(1, 1).size() == 1);
  CHECK(enumerate_all(1, 2).size() == 1);
  CHECK(enumerate_all(1, 3).size() == 1);
}

TEST_CASE("sampling mode is deterministic per seed and within budget") {
  // 3^9 candidates exceed the budget, forcing sampling.
  InstanceEnumerator a(3, 1, 2000, 7);
  InstanceEnumerator b(3, 1, 2000, 7);
  CHECK_FALSE(a.exhaustive());

  std::vector<std::vector<int>> tables_a, tables_b;
  while (auto g = a.next()) tables_a.push_back(g->table());
  while (auto g = b.next()) tables_b.push_back(g->table());
  CHECK(tables_a == tables_b);
  CHECK_FALSE(tables_a.empty());
  CHECK(a.candidates_tried() == 2000);
  CHECK(a.emitted() == tables_a.size());
  CHECK(a.yield_rate() > 0.0);
  CHECK(a.yield_rate() <= 1.0);

  InstanceEnumerator c(3, 1, 2000, 8);
  std::vector<std::vector<int>> tables_c;
  while (auto g = c.next()) tables_c.push_back(g->table());
  CHECK(tables_a != tables_c);  // different seed, different stream

  CHECK_THROWS_AS(enumerate_all(3, 2, 500), std::invalid_argument);
}

TEST_CASE("canonical forms identify structures up to relabeling") {
  const auto LZ2 = make_left_zero(2, 1);
  const auto RZ2 = make_right_zero(2, 1);

  // Relabeling the carrier of a left-zero structure changes nothing.
  const GammaSemigroup relabeled(2, 1, {0, 0, 1, 1});
  CHECK(canonicalize(LZ2) == canonicalize(relabeled));
  CHECK(canonicalize(LZ2) != canonicalize(RZ2));

  // Swapping parameter slices is a relabeling of the parameter set.
  const auto MOD3 = make_modular(3, {1, 2});
  const auto swapped = make_modular(3, {2, 1});
  CHECK(canonicalize(MOD3) == canonicalize(swapped));

  // Canonical tables are fixed points.
  const auto canon = canonicalize(MOD3);
  CHECK(canonicalize(GammaSemigroup(3, 2, canon)) == canon);

  CHECK_THROWS_AS(canonicalize(make_left_zero(7, 1)), std::logic_error);
  CHECK_THROWS_AS(canonicalize(make_left_zero(2, 4)), std::logic_error);
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
  const auto all = enumerate_all(2, 2);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      CHECK((canonicalize(all[i]) == canonicalize(all[j])) ==
            isomorphic(all[i], all[j]));
}

TEST_CASE("splitmix64 matches the reference stream") {
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xE220A8397B1DCDAFull);
  CHECK(state == 0x9E3779B97F4A7C15ull);
  CHECK(splitmix64(state) == 0x6E789E6AA1B965F4ull);
}
