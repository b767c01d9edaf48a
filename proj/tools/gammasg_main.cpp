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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gsg/fuzzy.hpp"
#include "gsg/gamma_semigroup.hpp"
#include "gsg/instances.hpp"
#include "gsg/io.hpp"
#include "gsg/morphisms.hpp"
#include "gsg/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

gsg::GammaSemigroup load_structure(const std::string& path) {
  const gsg::RawInstance raw = gsg::load_instance_file(path);
  return gsg::GammaSemigroup(raw.n, raw.m, raw.table);
}

int run_validate(const std::string& path) {
  const gsg::RawInstance raw = gsg::load_instance_file(path);
  const gsg::TableValidation v =
      gsg::validate_table(raw.n, raw.m, raw.table);
  if (v.ok()) {
    std::cout << "valid\n";
    return kExitOk;
  }
  if (!v.shape_ok) {
    std::cout << "shape: expected " << v.expected_entries << " entries, got "
              << v.actual_entries << "\n";
    return kExitViolation;
  }
  for (const auto& r : v.range_violations)
    std::cout << "range " << r.x << " " << r.gamma << " " << r.y << " "
              << r.value << "\n";
  for (const auto& a : v.assoc_violations)
    std::cout << a.x << " " << a.beta << " " << a.y << " " << a.gamma << " "
              << a.z << " " << a.lhs << " " << a.rhs << "\n";
  return kExitViolation;
}

int run_classify(const std::string& path, bool as_json) {
  const gsg::GammaSemigroup G = load_structure(path);
  const gsg::StructureProfile profile = gsg::classify(G);
  if (as_json)
    std::cout << gsg::profile_to_json(profile).dump(2) << "\n";
  else
    std::cout << gsg::profile_to_text(profile);
  return kExitOk;
}

int run_check(const std::string& path, const std::string& kind_text,
              const std::string& subset_arg, const std::string& fuzzy_path) {
  const auto kind = gsg::parse_ideal_kind(kind_text);
  if (!kind) {
    std::cerr << "unknown ideal kind '" << kind_text << "'\n";
    return kExitUsage;
  }
  const gsg::GammaSemigroup G = load_structure(path);

  std::optional<std::string> violation;
  if (!subset_arg.empty()) {
    const gsg::ElementSubset subset =
        gsg::parse_subset_arg(subset_arg, G.size());
    violation = gsg::crisp_violation(G, *kind, subset);
  } else {
    const gsg::FuzzySubset mu = gsg::load_fuzzy_file(fuzzy_path, G.size());
    violation = gsg::fuzzy_violation(G, *kind, mu);
  }
  if (!violation) {
    std::cout << "true\n";
    return kExitOk;
  }
  std::cout << "false\n" << *violation << "\n";
  return kExitViolation;
}

int run_hom(const std::string& source_path, const std::string& target_path,
            const std::string& map_path, const std::string& pullback_path,
            const std::string& pushforward_path) {
  const gsg::GammaSemigroup source = load_structure(source_path);
  const gsg::GammaSemigroup target = load_structure(target_path);
  const std::vector<int> map = gsg::load_map_file(map_path, source.size());

  const gsg::HomValidation v = gsg::validate_hom(source, target, map);
  if (!v.ok()) {
    for (const auto& e : v.errors) std::cout << "error " << e << "\n";
    for (const auto& viol : v.violations)
      std::cout << viol.x << " " << viol.gamma << " " << viol.y << " "
                << viol.image_of_product << " " << viol.product_of_images
                << "\n";
    return kExitViolation;
  }
  const gsg::Homomorphism& hom = *v.hom;
  std::cout << (hom.surjective ? "valid surjective" : "valid") << "\n";

  if (!pullback_path.empty()) {
    const gsg::FuzzySubset lambda =
        gsg::load_fuzzy_file(pullback_path, target.size());
    std::cout << gsg::emit_fuzzy_text(gsg::pullback(hom, lambda));
  }
  if (!pushforward_path.empty()) {
    if (!hom.surjective) {
      std::cerr << "pushforward needs a surjective map\n";
      return kExitViolation;
    }
    const gsg::FuzzySubset mu =
        gsg::load_fuzzy_file(pushforward_path, source.size());
    std::cout << gsg::emit_fuzzy_text(gsg::pushforward(hom, mu));
  }
  return kExitOk;
}

int grid_levels_default() {
  const char* env = std::getenv("GAMMASG_GRID");
  if (env == nullptr) return 3;
  try {
    const int levels = std::stoi(env);
    if (levels >= 2) return levels;
  } catch (const std::exception&) {
  }
  throw gsg::ParseError(std::string("GAMMASG_GRID must be an integer >= 2, "
                                    "got '") +
                        env + "'");
}

int run_verify(int max_n, int max_m, int levels,
               const std::string& theorems_csv, std::uint64_t seed,
               std::uint64_t budget, const std::string& json_path) {
  std::vector<gsg::TheoremId> theorems;
  if (theorems_csv.empty()) {
    const auto& all = gsg::theorem_catalog();
    theorems.assign(all.begin(), all.end());
  } else {
    std::string current;
    const auto take = [&] {
      const auto id = gsg::parse_theorem_id(current);
      if (!id) throw gsg::ParseError("unknown theorem '" + current + "'");
      theorems.push_back(*id);
      current.clear();
    };
    for (char c : theorems_csv) {
      if (c == ',')
        take();
      else if (c != ' ')
        current.push_back(c);
    }
    take();
  }

  std::vector<gsg::CorpusInstance> corpus;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 1; m <= max_m; ++m) {
      gsg::InstanceEnumerator stream(n, m, budget, seed);
      int index = 0;
      while (auto G = stream.next()) {
        const std::string tag = stream.exhaustive() ? "-" : "-s";
        corpus.push_back({"n" + std::to_string(n) + "m" + std::to_string(m) +
                              tag + std::to_string(index++),
                          std::move(*G)});
      }
      std::cout << "class n" << n << "m" << m << ": "
                << (stream.exhaustive() ? "exhaustive" : "sampled")
                << " structures=" << stream.emitted()
                << " candidates=" << stream.candidates_tried() << "\n";
    }

  const gsg::GradeGrid grid = gsg::GradeGrid::uniform(levels);
  const gsg::CorpusReport report =
      gsg::verify_corpus(corpus, grid, theorems);
  std::cout << gsg::corpus_report_to_text(report);

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write '" << json_path << "'\n";
      return kExitUsage;
    }
    out << gsg::corpus_report_to_json(report).dump(2) << "\n";

    // Replayable witness files beside the report, one per counterexample.
    int witness_index = 0;
    for (const auto& r : report.results) {
      if (r.status != gsg::CheckStatus::counterexample) continue;
      const std::string witness_path =
          json_path + ".witness-" + std::to_string(witness_index++) + ".txt";
      std::ofstream w(witness_path);
      w << "# theorem " << gsg::theorem_name(r.id) << " on " << r.instance_id
        << "\n";
      for (const auto& inst : report.corpus)
        if (inst.id == r.instance_id) {
          w << gsg::emit_instance_text(inst.structure);
          break;
        }
      w << "# witness: " << r.witness << "\n";
      std::cout << "witness written: " << witness_path << "\n";
    }
  }
  return report.ok() ? kExitOk : kExitViolation;
}

int run_generate(const gsg::InstanceSpec& spec) {
  std::cout << gsg::emit_instance_text(gsg::make_instance(spec));
  return kExitOk;
}

int run_enumerate(int n, int m, std::uint64_t budget, std::uint64_t seed,
                  bool count_only) {
  gsg::InstanceEnumerator stream(n, m, budget, seed);
  std::vector<gsg::GammaSemigroup> found;
  while (auto G = stream.next()) found.push_back(std::move(*G));
  std::cout << "count " << found.size() << " exhaustive "
            << (stream.exhaustive() ? "true" : "false") << " candidates "
            << stream.candidates_tried() << "\n";
  if (!count_only) {
    for (std::size_t i = 0; i < found.size(); ++i) {
      std::cout << "# instance " << i << "\n"
                << gsg::emit_instance_text(found[i]) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Gamma-semigroup toolkit: validation, ideal checks, "
               "classification, morphisms, and catalog verification"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string fuzzy_path;
  std::string subset_arg;
  std::string kind_text;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "check a table file");
  validate->add_option("file", instance_path, "instance file")->required();

  auto* classify = app.add_subcommand("classify", "structural profile");
  classify->add_option("file", instance_path, "instance file")->required();
  classify->add_flag("--json", as_json, "emit a JSON document");

  auto* check = app.add_subcommand("check", "decide an ideal predicate");
  check->add_option("file", instance_path, "instance file")->required();
  check->add_option("--kind", kind_text,
                    "subsemigroup|left|right|two_sided|bi|one_two|quasi")
      ->required();
  auto* subset_opt =
      check->add_option("--subset", subset_arg, "comma-separated indices");
  auto* fuzzy_opt =
      check->add_option("--fuzzy", fuzzy_path, "fuzzy subset file");
  subset_opt->excludes(fuzzy_opt);

  std::string source_path, target_path, map_path;
  std::string pullback_path, pushforward_path;
  auto* hom = app.add_subcommand("hom", "validate a structure map");
  hom->add_option("--source", source_path, "source instance file")->required();
  hom->add_option("--target", target_path, "target instance file")->required();
  hom->add_option("--map", map_path, "map file: one image per element")
      ->required();
  hom->add_option("--pullback", pullback_path,
                  "fuzzy file on the target to pull back");
  hom->add_option("--pushforward", pushforward_path,
                  "fuzzy file on the source to push forward");

  int max_n = 2, max_m = 2, levels = 0;
  std::string theorems_csv, json_path;
  std::uint64_t seed = 0, budget = std::uint64_t{1} << 20;
  auto* verify = app.add_subcommand("verify", "run the theorem catalog");
  verify->add_option("--n", max_n, "max carrier size (default 2)");
  verify->add_option("--m", max_m, "max parameter-set size (default 2)");
  verify->add_option("--grid", levels,
                     "grade grid levels (default: GAMMASG_GRID or 3)");
  verify->add_option("--theorems", theorems_csv,
                     "comma-separated ids, e.g. T3.12,T5.13 (default: all)");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--budget", budget,
                     "candidate budget per dimension class");
  verify->add_option("--json", json_path, "write a JSON report here");

  gsg::InstanceSpec spec;
  int gen_n = 2, gen_m = 1;
  std::vector<int> gen_gammas, gen_table;
  std::uint64_t gen_budget = std::uint64_t{1} << 20, gen_seed = 0;
  bool count_only = false;
  auto* generate = app.add_subcommand("generate", "emit named structures");
  generate->require_subcommand(1);
  auto* g_left = generate->add_subcommand("left_zero", "x g y = x");
  auto* g_right = generate->add_subcommand("right_zero", "x g y = y");
  auto* g_mod = generate->add_subcommand("modular", "x g y = x*g*y mod n");
  auto* g_lift = generate->add_subcommand(
      "lift", "replicate a semigroup table in each parameter slice");
  auto* g_enum =
      generate->add_subcommand("enumerate", "stream all valid structures");
  for (auto* sub : {g_left, g_right, g_mod, g_lift, g_enum})
    sub->add_option("--size,-n", gen_n, "carrier size")->required();
  for (auto* sub : {g_left, g_right, g_enum})
    sub->add_option("--gamma,-m", gen_m, "parameter-set size (default 1)");
  g_mod->add_option("--gammas", gen_gammas, "parameter values, each in 1..n-1")
      ->required();
  g_lift->add_option("--table", gen_table, "n*n product table, row-major")
      ->required();
  g_enum->add_option("--budget", gen_budget, "candidate budget");
  g_enum->add_option("--seed", gen_seed, "sampling seed");
  g_enum->add_flag("--count-only", count_only, "print only the tally");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(instance_path);
    if (classify->parsed()) return run_classify(instance_path, as_json);
    if (check->parsed()) {
      if (subset_arg.empty() == fuzzy_path.empty()) {
        std::cerr << "check needs exactly one of --subset and --fuzzy\n";
        return kExitUsage;
      }
      return run_check(instance_path, kind_text, subset_arg, fuzzy_path);
    }
    if (hom->parsed())
      return run_hom(source_path, target_path, map_path, pullback_path,
                     pushforward_path);
    if (verify->parsed()) {
      if (levels == 0) levels = grid_levels_default();
      if (levels < 2) {
        std::cerr << "--grid needs at least 2 levels\n";
        return kExitUsage;
      }
      return run_verify(max_n, max_m, levels, theorems_csv, seed, budget,
                        json_path);
    }
    if (generate->parsed()) {
      spec.n = gen_n;
      spec.m = gen_m;
      if (g_left->parsed()) {
        spec.kind = gsg::InstanceSpec::Kind::left_zero;
      } else if (g_right->parsed()) {
        spec.kind = gsg::InstanceSpec::Kind::right_zero;
      } else if (g_mod->parsed()) {
        spec.kind = gsg::InstanceSpec::Kind::modular;
        spec.gammas = gen_gammas;
      } else if (g_lift->parsed()) {
        spec.kind = gsg::InstanceSpec::Kind::lift;
        spec.table = gen_table;
      } else {
        return run_enumerate(gen_n, gen_m, gen_budget, gen_seed, count_only);
      }
      return run_generate(spec);
    }
  } catch (const gsg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
