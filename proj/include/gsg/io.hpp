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

#ifndef GAMMASG_IO_HPP_
#define GAMMASG_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gsg/fuzzy.hpp"
#include "gsg/gamma_semigroup.hpp"
#include "gsg/morphisms.hpp"
#include "gsg/theorems.hpp"

namespace gsg {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance text: first line "n m", then m blocks of n rows of n integers
// (row x, column y, entry x g y). '#' starts a comment; blank lines ignored.
struct RawInstance {
  int n = 0;
  int m = 0;
  std::vector<int> table;
};

RawInstance parse_instance_text(std::string_view text);
RawInstance load_instance_file(const std::string& path);
std::string emit_instance_text(const GammaSemigroup& G);

// Fuzzy text: n whitespace-separated grades, each "p/q" or an integer 0/1.
FuzzySubset parse_fuzzy_text(std::string_view text, int n);
FuzzySubset load_fuzzy_file(const std::string& path, int n);
std::string emit_fuzzy_text(const FuzzySubset& mu);

// Homomorphism text: n integers, the image of each source element.
std::vector<int> parse_map_text(std::string_view text, int n);
std::vector<int> load_map_file(const std::string& path, int n);

// Comma-separated element indices, e.g. "0,2".
ElementSubset parse_subset_arg(std::string_view arg, int n);

nlohmann::json profile_to_json(const StructureProfile& profile);
std::string profile_to_text(const StructureProfile& profile);

nlohmann::json corpus_report_to_json(const CorpusReport& report);
std::string corpus_report_to_text(const CorpusReport& report);

}  // namespace gsg

#endif  // GAMMASG_IO_HPP_
