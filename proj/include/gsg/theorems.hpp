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

#ifndef GAMMASG_THEOREMS_HPP_
#define GAMMASG_THEOREMS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsg/fuzzy.hpp"
#include "gsg/gamma_semigroup.hpp"
#include "gsg/morphisms.hpp"

namespace gsg {

//! Catalog of the checkable laws. Each entry is decided extensionally on a
//! concrete finite instance, quantifying fuzzy sides over a grade-grid family.
enum class TheoremId {
  T3_4, T3_5, T3_6, T3_7, P3_8, P3_9, P3_10, P3_11, T3_12, T3_13,
  T4_7, T4_8, T4_9, T4_10, P4_13, T4_14, C4_15, T4_17, T4_18, P4_19,
  T4_24, T4_25,
  P5_2, P5_3, C5_4, P5_5, T5_6, T5_7, P5_8, P5_9, P5_10, P5_11, L5_12,
  T5_13, T5_14, T5_15, T5_16, T5_17, T5_18,
};

inline constexpr int kTheoremCount = 39;

//! All ids in catalog order.
const std::array<TheoremId, kTheoremCount>& theorem_catalog();

std::string_view theorem_name(TheoremId id);        // "T3.4"
std::optional<TheoremId> parse_theorem_id(std::string_view text);
std::string_view theorem_hypothesis(TheoremId id);  // "" when unconditional
std::string_view theorem_statement(TheoremId id);

enum class CheckStatus { verified, counterexample, hypothesis_not_met, skipped };
std::string_view to_string(CheckStatus s);

struct FamilyStats {
  int grid_levels = 0;
  std::uint64_t family_size = 0;  // size of the primary quantification domain
  bool truncated = false;
};

struct TheoremReport {
  TheoremId id{};
  std::string instance_id;
  CheckStatus status = CheckStatus::skipped;
  std::string witness;  // replayable data, set for counterexamples
  std::string note;     // informational (hypothesis misses, side readings)
  FamilyStats family;
};

struct FuzzyFamilyOptions {
  std::uint64_t budget = 1u << 18;
  std::optional<IdealKind> filter;
  std::uint64_t seed = 0;  // used only when the budget forces sampling
};

struct FuzzyFamily {
  std::vector<FuzzySubset> members;
  bool truncated = false;
};

//! Every non-empty grade assignment from the grid in deterministic odometer
//! order (last element index varies fastest), optionally filtered by an ideal
//! kind. If |grid|^n exceeds the budget the family is sampled instead and
//! flagged truncated; every characteristic function is still injected when
//! the carrier permits, since those are the witnesses converse checks need.
FuzzyFamily enumerate_fuzzy_family(const GammaSemigroup& G,
                                   const GradeGrid& grid,
                                   const FuzzyFamilyOptions& options = {});

//! Decides one catalog entry on one instance.
TheoremReport run_check(TheoremId id, const GammaSemigroup& G,
                        const GradeGrid& grid,
                        const std::string& instance_id = "instance");

struct CorpusInstance {
  std::string id;
  GammaSemigroup structure;
};

struct CorpusReport {
  std::vector<CorpusInstance> corpus;
  std::vector<TheoremReport> results;  // sorted by (theorem, instance)
  int verified = 0;
  int counterexamples = 0;
  int hypothesis_not_met = 0;
  int skipped = 0;

  bool ok() const { return counterexamples == 0; }
};

//! Runs the selected catalog entries over every instance; deterministic.
CorpusReport verify_corpus(const std::vector<CorpusInstance>& corpus,
                           const GradeGrid& grid,
                           const std::vector<TheoremId>& theorems);

}  // namespace gsg

#endif  // GAMMASG_THEOREMS_HPP_
