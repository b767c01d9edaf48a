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

#include <string>

#include "doctest.h"

#include "gsg/instances.hpp"
#include "gsg/io.hpp"
#include "gsg/theorems.hpp"

using namespace gsg;

namespace {

std::string data_path(const char* name) {
  return std::string(GSG_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("instance files parse with parameter-major blocks") {
  const auto raw = load_instance_file(data_path("mod3.txt"));
  REQUIRE(raw.n == 3);
  REQUIRE(raw.m == 2);
  const GammaSemigroup G(raw.n, raw.m, raw.table);
  // File row x=1 of the first parameter block reads "0 1 2".
  CHECK(G.product(1, 0, 2) == 2);
  CHECK(G.product(2, 0, 2) == 1);
  // Second block row x=1 reads "0 2 1".
  CHECK(G.product(1, 1, 1) == 2);
  CHECK(G.product(1, 1, 2) == 1);
  CHECK(G.table() == make_modular(3, {1, 2}).table());
}

TEST_CASE("emit and parse are mutually inverse") {
  for (const auto& G :
       {make_modular(3, {1, 2}), make_left_zero(2, 3), make_right_zero(4, 2)}) {
    const auto text = emit_instance_text(G);
    const auto raw = parse_instance_text(text);
    CHECK(raw.n == G.size());
    CHECK(raw.m == G.gamma_size());
    CHECK(raw.table == G.table());
  }

  const auto lz = load_instance_file(data_path("lz2.txt"));
  CHECK(lz.table == make_left_zero(2, 1).table());
}

TEST_CASE("instance parse errors are reported as such") {
  CHECK_THROWS_AS(parse_instance_text("2 1\n0 0\n1"), ParseError);   // short
  CHECK_THROWS_AS(parse_instance_text("2 1\n0 a\n1 1"), ParseError); // token
  CHECK_THROWS_AS(parse_instance_text("0 1\n"), ParseError);         // n < 1
  CHECK_THROWS_AS(parse_instance_text(""), ParseError);
  CHECK_THROWS_AS(parse_instance_text("2 1\n0 0\n1 1\n9"), ParseError);

  // Range problems are left to table validation, not the tokenizer.
  const auto raw = load_instance_file(data_path("out_of_range.txt"));
  CHECK(raw.table == std::vector<int>{0, 3, 0, 0});
  const auto v = validate_table(raw.n, raw.m, raw.table);
  CHECK_FALSE(v.range_violations.empty());
}

TEST_CASE("fuzzy files round-trip") {
  const auto mu = load_fuzzy_file(data_path("half_one.txt"), 2);
  CHECK(mu[0] == Grade(1, 2));
  CHECK(mu[1] == Grade::one());
  CHECK(emit_fuzzy_text(mu) == "1/2 1\n");
  CHECK(parse_fuzzy_text(emit_fuzzy_text(mu), 2).str() == mu.str());

  const auto left = load_fuzzy_file(data_path("mod3_left.txt"), 3);
  CHECK(check_fuzzy(make_modular(3, {1, 2}), IdealKind::left, left));

  CHECK_THROWS_AS(parse_fuzzy_text("1/2", 2), ParseError);      // count
  CHECK_THROWS_AS(parse_fuzzy_text("1/2 1 0", 2), ParseError);  // count
  CHECK_THROWS_AS(parse_fuzzy_text("3/2 1", 2), ParseError);    // range
  CHECK_THROWS_AS(parse_fuzzy_text("x 1", 2), ParseError);      // token
}

TEST_CASE("maps and subset arguments parse defensively") {
  CHECK(parse_map_text("0 0 1", 3) == std::vector<int>{0, 0, 1});
  CHECK_THROWS_AS(parse_map_text("0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_map_text("0 1 2 0", 3), ParseError);

  const auto subset = parse_subset_arg("0,2", 3);
  CHECK(subset.contains(0));
  CHECK_FALSE(subset.contains(1));
  CHECK(subset.contains(2));
  CHECK_THROWS_AS(parse_subset_arg("5", 3), ParseError);
  CHECK_THROWS_AS(parse_subset_arg("", 3), ParseError);
  CHECK_THROWS_AS(parse_subset_arg("0,,2", 3), ParseError);
}

TEST_CASE("profiles serialize all flags") {
  const auto profile = classify(make_modular(3, {1, 2}));
  const auto j = profile_to_json(profile);
  CHECK(j["regular"] == true);
  CHECK(j["left_zero"] == false);
  CHECK(j["duo"] == true);
  CHECK(j["idempotents"] == nlohmann::json::array({0, 1, 2}));
  CHECK(j.size() == 13);  // twelve flags plus the idempotent list

  const auto text = profile_to_text(profile);
  CHECK(text.find("regular: true") != std::string::npos);
  CHECK(text.find("idempotents:") != std::string::npos);
}

TEST_CASE("corpus reports serialize schema version 1") {
  std::vector<CorpusInstance> corpus;
  corpus.push_back({"lz2", make_left_zero(2, 1)});
  const auto rep =
      verify_corpus(corpus, GradeGrid::standard(),
                    {TheoremId::T3_4, TheoremId::P4_13, TheoremId::T4_7});

  const auto j = corpus_report_to_json(rep);
  CHECK(j["version"] == 1);
  REQUIRE(j["corpus"].size() == 1);
  CHECK(j["corpus"][0]["id"] == "lz2");
  CHECK(j["corpus"][0]["n"] == 2);
  CHECK(j["corpus"][0]["m"] == 1);
  CHECK(j["corpus"][0]["table"][0][1][0] == 1);  // row y-major per parameter
  CHECK(j["corpus"][0].contains("canonical_table"));
  REQUIRE(j["results"].size() == 3);
  CHECK(j["results"][0]["theorem"] == "T3.4");
  CHECK(j["results"][0]["instance"] == "lz2");
  CHECK(j["results"][0]["status"] == "verified");
  CHECK(j["results"][0]["grid_levels"] == 3);
  CHECK(j["results"][0]["family_size"] == 3);  // non-empty subsets of two
  CHECK(j["summary"]["counterexamples"] == 0);

  const auto text = corpus_report_to_text(rep);
  CHECK(text.find("instances: 1") != std::string::npos);
  CHECK(text.find("T3.4: verified=1") != std::string::npos);
  CHECK(text.find("totals: verified=") != std::string::npos);
  CHECK(text.find("counterexamples=0") != std::string::npos);
}
