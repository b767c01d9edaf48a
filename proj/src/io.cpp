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

#include "gsg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gsg/instances.hpp"

namespace gsg {

namespace {

// Whitespace-separated tokens; '#' comments run to end of line.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  bool in_comment = false;
  const auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  for (char c : text) {
    if (c == '\n') in_comment = false;
    if (in_comment) continue;
    if (c == '#') {
      in_comment = true;
      flush();
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

int parse_int_token(const std::string& token) {
  int value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("expected an integer, got '" + token + "'");
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::vector<std::pair<const char*, bool>> profile_flags(
    const StructureProfile& p) {
  return {
      {"regular", p.regular},
      {"intra_regular", p.intra_regular},
      {"left_regular", p.left_regular},
      {"right_regular", p.right_regular},
      {"left_simple", p.left_simple},
      {"right_simple", p.right_simple},
      {"simple", p.simple},
      {"left_zero", p.left_zero},
      {"right_zero", p.right_zero},
      {"left_duo", p.left_duo},
      {"right_duo", p.right_duo},
      {"duo", p.duo},
  };
}

nlohmann::json table_json(const GammaSemigroup& G) {
  nlohmann::json blocks = nlohmann::json::array();
  for (int g = 0; g < G.gamma_size(); ++g) {
    nlohmann::json rows = nlohmann::json::array();
    for (int x = 0; x < G.size(); ++x) {
      nlohmann::json row = nlohmann::json::array();
      for (int y = 0; y < G.size(); ++y) row.push_back(G.product(x, g, y));
      rows.push_back(std::move(row));
    }
    blocks.push_back(std::move(rows));
  }
  return blocks;
}

}  // namespace

RawInstance parse_instance_text(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.size() < 2)
    throw ParseError("instance text needs at least 'n m' and a table");
  RawInstance raw;
  raw.n = parse_int_token(tokens[0]);
  raw.m = parse_int_token(tokens[1]);
  if (raw.n < 1 || raw.m < 1)
    throw ParseError("instance dimensions must be positive, got n=" +
                     std::to_string(raw.n) + " m=" + std::to_string(raw.m));
  const std::size_t expected = static_cast<std::size_t>(raw.n) *
                               static_cast<std::size_t>(raw.m) *
                               static_cast<std::size_t>(raw.n);
  if (tokens.size() - 2 != expected)
    throw ParseError("expected " + std::to_string(expected) +
                     " table entries, got " +
                     std::to_string(tokens.size() - 2));
  // The file groups entries by parameter block (g, x, y); the flat table is
  // element-major (x, g, y).
  raw.table.assign(expected, 0);
  std::size_t i = 2;
  for (int g = 0; g < raw.m; ++g)
    for (int x = 0; x < raw.n; ++x)
      for (int y = 0; y < raw.n; ++y)
        raw.table[(static_cast<std::size_t>(x) * raw.m + g) * raw.n + y] =
            parse_int_token(tokens[i++]);
  return raw;
}

RawInstance load_instance_file(const std::string& path) {
  return parse_instance_text(read_file(path));
}

std::string emit_instance_text(const GammaSemigroup& G) {
  std::ostringstream out;
  out << G.size() << " " << G.gamma_size() << "\n";
  for (int g = 0; g < G.gamma_size(); ++g) {
    out << "# gamma " << g << "\n";
    for (int x = 0; x < G.size(); ++x) {
      for (int y = 0; y < G.size(); ++y) {
        if (y) out << " ";
        out << G.product(x, g, y);
      }
      out << "\n";
    }
  }
  return out.str();
}

FuzzySubset parse_fuzzy_text(std::string_view text, int n) {
  const auto tokens = tokenize(text);
  if (static_cast<int>(tokens.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " grades, got " +
                     std::to_string(tokens.size()));
  std::vector<Grade> grades;
  grades.reserve(tokens.size());
  for (const auto& token : tokens) {
    try {
      grades.push_back(Grade::parse(token));
    } catch (const std::exception& e) {
      throw ParseError("bad grade '" + token + "': " + e.what());
    }
  }
  return FuzzySubset(std::move(grades));
}

FuzzySubset load_fuzzy_file(const std::string& path, int n) {
  return parse_fuzzy_text(read_file(path), n);
}

std::string emit_fuzzy_text(const FuzzySubset& mu) {
  std::string out;
  for (int i = 0; i < mu.size(); ++i) {
    if (i) out += " ";
    out += mu[i].str();
  }
  out += "\n";
  return out;
}

std::vector<int> parse_map_text(std::string_view text, int n) {
  const auto tokens = tokenize(text);
  if (static_cast<int>(tokens.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " image entries, got " +
                     std::to_string(tokens.size()));
  std::vector<int> map;
  map.reserve(tokens.size());
  for (const auto& token : tokens) map.push_back(parse_int_token(token));
  return map;
}

std::vector<int> load_map_file(const std::string& path, int n) {
  return parse_map_text(read_file(path), n);
}

ElementSubset parse_subset_arg(std::string_view arg, int n) {
  ElementSubset subset(n);
  std::string current;
  const auto take = [&] {
    if (current.empty()) throw ParseError("empty element index in subset");
    const int i = parse_int_token(current);
    if (i < 0 || i >= n)
      throw ParseError("element index " + std::to_string(i) +
                       " outside 0.." + std::to_string(n - 1));
    subset.insert(i);
    current.clear();
  };
  for (char c : arg) {
    if (c == ',')
      take();
    else if (c != ' ')
      current.push_back(c);
  }
  take();
  return subset;
}

nlohmann::json profile_to_json(const StructureProfile& profile) {
  nlohmann::json j;
  for (const auto& [name, value] : profile_flags(profile)) j[name] = value;
  j["idempotents"] = profile.idempotents.indices();
  return j;
}

std::string profile_to_text(const StructureProfile& profile) {
  std::string out;
  for (const auto& [name, value] : profile_flags(profile))
    out += std::string(name) + ": " + bool_str(value) + "\n";
  out += "idempotents: " + profile.idempotents.str() + "\n";
  return out;
}

nlohmann::json corpus_report_to_json(const CorpusReport& report) {
  nlohmann::json j;
  j["version"] = 1;

  nlohmann::json corpus = nlohmann::json::array();
  for (const auto& inst : report.corpus) {
    nlohmann::json item;
    item["id"] = inst.id;
    item["n"] = inst.structure.size();
    item["m"] = inst.structure.gamma_size();
    item["table"] = table_json(inst.structure);
    if (inst.structure.size() <= kMaxCanonCarrier &&
        inst.structure.gamma_size() <= kMaxCanonGamma)
      item["canonical_table"] = canonicalize(inst.structure);
    corpus.push_back(std::move(item));
  }
  j["corpus"] = std::move(corpus);

  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json item;
    item["theorem"] = std::string(theorem_name(r.id));
    item["instance"] = r.instance_id;
    item["status"] = std::string(to_string(r.status));
    item["grid_levels"] = r.family.grid_levels;
    item["family_size"] = r.family.family_size;
    if (r.family.truncated) item["truncated"] = true;
    if (!r.witness.empty()) item["witness"] = r.witness;
    if (!r.note.empty()) item["note"] = r.note;
    results.push_back(std::move(item));
  }
  j["results"] = std::move(results);

  j["summary"] = {
      {"verified", report.verified},
      {"counterexamples", report.counterexamples},
      {"hypothesis_not_met", report.hypothesis_not_met},
      {"skipped", report.skipped},
  };
  return j;
}

std::string corpus_report_to_text(const CorpusReport& report) {
  std::ostringstream out;
  out << "instances: " << report.corpus.size() << "\n";

  // One line per theorem with its status tally across the corpus.
  for (TheoremId id : theorem_catalog()) {
    int v = 0, c = 0, h = 0, s = 0;
    bool seen = false;
    for (const auto& r : report.results) {
      if (r.id != id) continue;
      seen = true;
      switch (r.status) {
        case CheckStatus::verified: ++v; break;
        case CheckStatus::counterexample: ++c; break;
        case CheckStatus::hypothesis_not_met: ++h; break;
        case CheckStatus::skipped: ++s; break;
      }
    }
    if (!seen) continue;
    out << theorem_name(id) << ": verified=" << v << " counterexamples=" << c
        << " hypothesis_not_met=" << h << " skipped=" << s << "\n";
  }

  for (const auto& r : report.results)
    if (r.status == CheckStatus::counterexample)
      out << "counterexample: " << theorem_name(r.id) << " on "
          << r.instance_id << ": " << r.witness << "\n";

  out << "totals: verified=" << report.verified
      << " counterexamples=" << report.counterexamples
      << " hypothesis_not_met=" << report.hypothesis_not_met
      << " skipped=" << report.skipped << "\n";
  return out.str();
}

}  // namespace gsg
