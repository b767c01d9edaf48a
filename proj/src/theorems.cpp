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

#include "gsg/theorems.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace gsg {

namespace {

struct CatalogEntry {
  TheoremId id;
  const char* name;
  const char* hypothesis;
  const char* statement;
};

constexpr CatalogEntry kCatalog[kTheoremCount] = {
    {TheoremId::T3_4, "T3.4", "",
     "a non-empty subset is a subsemigroup iff its characteristic function is "
     "a fuzzy subsemigroup"},
    {TheoremId::T3_5, "T3.5", "",
     "a non-empty subset is a bi-ideal iff its characteristic function is a "
     "fuzzy bi-ideal"},
    {TheoremId::T3_6, "T3.6", "",
     "mu is a fuzzy subsemigroup iff every level cut at an attained grade is "
     "a subsemigroup"},
    {TheoremId::T3_7, "T3.7", "",
     "mu is a fuzzy bi-ideal iff every level cut at an attained grade is a "
     "bi-ideal"},
    {TheoremId::P3_8, "P3.8", "",
     "the meet of two fuzzy subsemigroups (bi-ideals) is one when non-empty"},
    {TheoremId::P3_9, "P3.9", "",
     "pullbacks preserve fuzzy subsemigroups and bi-ideals; pushforwards "
     "along surjections do too"},
    {TheoremId::P3_10, "P3.10", "",
     "composition with an endomorphism preserves fuzzy subsemigroups and "
     "bi-ideals"},
    {TheoremId::P3_11, "P3.11", "",
     "pointwise integer powers preserve fuzzy subsemigroups and bi-ideals"},
    {TheoremId::T3_12, "T3.12", "",
     "mu is a fuzzy subsemigroup iff mu o mu <= mu"},
    {TheoremId::T3_13, "T3.13", "",
     "mu is a fuzzy bi-ideal iff mu o mu <= mu and mu o chi o mu <= mu"},
    {TheoremId::T4_7, "T4.7", "regular and left duo (right duo, duo)",
     "fuzzy right (left, two-sided) ideals coincide with fuzzy bi-ideals"},
    {TheoremId::T4_8, "T4.8", "regular and left duo (right duo, duo)",
     "fuzzy bi-ideals coincide with fuzzy (1,2)-ideals"},
    {TheoremId::T4_9, "T4.9", "regular",
     "left duo iff fuzzy left duo (right and two-sided versions likewise)"},
    {TheoremId::T4_10, "T4.10", "regular",
     "every bi-ideal is a right (left, two-sided) ideal iff every fuzzy "
     "bi-ideal is a fuzzy right (left, two-sided) ideal"},
    {TheoremId::P4_13, "P4.13", "left zero (right zero)",
     "every fuzzy left (right) ideal is constant"},
    {TheoremId::T4_14, "T4.14", "regular",
     "idempotents are pairwise left (right) zero, some parameter per pair, "
     "iff every fuzzy left (right) ideal is constant on idempotents"},
    {TheoremId::C4_15, "C4.15", "every element idempotent",
     "pairwise left (right) zero, some parameter per pair, iff every fuzzy "
     "left (right) ideal is constant"},
    {TheoremId::T4_17, "T4.17", "",
     "intra-regular iff every fuzzy ideal has mu(a) = mu(a b a) for each a "
     "and some b"},
    {TheoremId::T4_18, "T4.18", "",
     "left (right) regular iff every fuzzy left (right) ideal has mu(a) = "
     "mu(a b a) for each a and some b"},
    {TheoremId::P4_19, "P4.19", "regular and intra-regular",
     "mu meet lambda <= mu o lambda (and <= both compositions' meet) for "
     "fuzzy bi-ideals"},
    {TheoremId::T4_24, "T4.24", "",
     "left (right, two-sided) simple iff every fuzzy left (right, two-sided) "
     "ideal is constant"},
    {TheoremId::T4_25, "T4.25", "left simple (right simple)",
     "every fuzzy bi-ideal is a fuzzy right (left) ideal"},
    {TheoremId::P5_2, "P5.2", "",
     "fuzzy one-sided ideals are fuzzy quasi ideals; fuzzy quasi ideals are "
     "fuzzy bi-ideals"},
    {TheoremId::P5_3, "P5.3", "",
     "a fuzzy quasi ideal is the meet of the fuzzy right ideal mu join "
     "(mu o chi) and the fuzzy left ideal (chi o mu) join mu; conversely any "
     "non-empty meet of a fuzzy right and a fuzzy left ideal is quasi"},
    {TheoremId::C5_4, "C5.4", "regular",
     "mu o lambda is a fuzzy quasi ideal for mu fuzzy right, lambda fuzzy "
     "left"},
    {TheoremId::P5_5, "P5.5", "regular",
     "mu o lambda is a fuzzy bi-ideal for mu fuzzy right, lambda fuzzy left"},
    {TheoremId::T5_6, "T5.6", "",
     "a non-empty subset is a quasi ideal iff its characteristic function is "
     "a fuzzy quasi ideal"},
    {TheoremId::T5_7, "T5.7", "",
     "mu is a fuzzy quasi ideal iff every level cut at an attained grade is a "
     "quasi ideal"},
    {TheoremId::P5_8, "P5.8", "",
     "pullbacks satisfy chi o (f^-1 lambda) <= f^-1 lambda for fuzzy left "
     "ideals (right dual)"},
    {TheoremId::P5_9, "P5.9", "",
     "pullbacks preserve fuzzy quasi ideals"},
    {TheoremId::P5_10, "P5.10", "",
     "surjective pushforwards satisfy chi o (f lambda) <= f lambda for fuzzy "
     "left ideals (right dual)"},
    {TheoremId::P5_11, "P5.11", "",
     "surjective pushforwards preserve fuzzy quasi ideals"},
    {TheoremId::L5_12, "L5.12", "",
     "chi_A <= chi_B iff A within B; chi_A meet chi_B = chi of the "
     "intersection; chi_A o chi_B = chi of the product set"},
    {TheoremId::T5_13, "T5.13", "",
     "regular iff mu o lambda = mu meet lambda for fuzzy right/left pairs iff "
     "one-sided ideals are composition-idempotent with quasi products iff "
     "delta = delta o chi o delta for fuzzy quasi ideals"},
    {TheoremId::T5_14, "T5.14", "",
     "regular and intra-regular iff every quasi ideal Q has Q Gamma Q = Q"},
    {TheoremId::T5_15, "T5.15", "",
     "every quasi ideal is product-idempotent iff every fuzzy quasi ideal is "
     "composition-idempotent"},
    {TheoremId::T5_16, "T5.16", "",
     "regular and intra-regular iff every fuzzy quasi ideal is idempotent iff "
     "every fuzzy bi-ideal is idempotent"},
    {TheoremId::T5_17, "T5.17", "",
     "fuzzy quasi iff mu(x) >= min(mu(b), mu(c)) over factorization pairs "
     "x = b a s = t b c"},
    {TheoremId::T5_18, "T5.18", "",
     "fuzzy quasi iff mu(x) >= max(min(mu(b), mu(c)), min(mu(t), mu(s))) over "
     "factorization pairs"},
};

const CatalogEntry& entry(TheoremId id) {
  for (const auto& e : kCatalog)
    if (e.id == id) return e;
  throw std::logic_error("unknown theorem id");
}

}  // namespace

const std::array<TheoremId, kTheoremCount>& theorem_catalog() {
  static const std::array<TheoremId, kTheoremCount> ids = [] {
    std::array<TheoremId, kTheoremCount> a{};
    for (int i = 0; i < kTheoremCount; ++i) a[static_cast<std::size_t>(i)] = kCatalog[i].id;
    return a;
  }();
  return ids;
}

std::string_view theorem_name(TheoremId id) { return entry(id).name; }
std::string_view theorem_hypothesis(TheoremId id) { return entry(id).hypothesis; }
std::string_view theorem_statement(TheoremId id) { return entry(id).statement; }

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (const auto& e : kCatalog)
    if (text == e.name) return e.id;
  return std::nullopt;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::verified: return "verified";
    case CheckStatus::counterexample: return "counterexample";
    case CheckStatus::hypothesis_not_met: return "hypothesis_not_met";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

FuzzyFamily enumerate_fuzzy_family(const GammaSemigroup& G,
                                   const GradeGrid& grid,
                                   const FuzzyFamilyOptions& options) {
  const int n = G.size();
  const int g = grid.size();
  const auto passes = [&](const FuzzySubset& mu) {
    return !options.filter || check_fuzzy(G, *options.filter, mu);
  };

  FuzzyFamily fam;
  std::uint64_t total = 1;
  bool fits = true;
  for (int i = 0; i < n; ++i) {
    if (total > options.budget / static_cast<std::uint64_t>(g)) {
      fits = false;
      break;
    }
    total *= static_cast<std::uint64_t>(g);
  }

  if (fits && total - 1 <= options.budget) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
      int i = n - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == g - 1)
        digits[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++digits[static_cast<std::size_t>(i)];
      FuzzySubset mu(n);
      for (int e = 0; e < n; ++e)
        mu.set(e, grid.levels()[static_cast<std::size_t>(
                   digits[static_cast<std::size_t>(e)])]);
      if (passes(mu)) fam.members.push_back(std::move(mu));
    }
    return fam;
  }

  // Sampled family. Characteristic functions are injected first when the
  // carrier permits: converse directions of the catalog rely on them.
  fam.truncated = true;
  std::set<std::string> seen;
  const auto push = [&](FuzzySubset mu) {
    if (mu.empty_support() || !passes(mu)) return false;
    if (!seen.insert(mu.str()).second) return false;
    fam.members.push_back(std::move(mu));
    return true;
  };
  if (n <= kMaxEnumerableCarrier &&
      (std::uint64_t{1} << n) - 1 <= options.budget) {
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < top; ++mask)
      push(characteristic(ElementSubset::from_mask(n, mask)));
  }
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t k = 0;
       fam.members.size() < options.budget && k < options.budget * 4; ++k) {
    FuzzySubset mu(n);
    for (int e = 0; e < n; ++e)
      mu.set(e, grid.levels()[static_cast<std::size_t>(
                 rng() % static_cast<std::uint64_t>(g))]);
    push(std::move(mu));
  }
  return fam;
}

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::verified;
  std::string witness;
  std::string note;
  std::optional<std::uint64_t> domain;  // overrides the reported family size
};

Outcome pass() { return {}; }

Outcome fail(std::string witness) {
  Outcome o;
  o.status = CheckStatus::counterexample;
  o.witness = std::move(witness);
  return o;
}

Outcome not_met(std::string_view hypothesis) {
  Outcome o;
  o.status = CheckStatus::hypothesis_not_met;
  o.note = "hypothesis not met: " + std::string(hypothesis);
  return o;
}

Outcome skipped(std::string note) {
  Outcome o;
  o.status = CheckStatus::skipped;
  o.note = std::move(note);
  return o;
}

struct Ctx {
  const GammaSemigroup& G;
  const GradeGrid& grid;
  StructureProfile profile;
  FuzzySubset chi;

  bool family_ready = false;
  FuzzyFamily family;
  std::vector<std::array<bool, kIdealKindCount>> flags;
  bool endos_ready = false;
  std::vector<Homomorphism> endos;

  int n() const { return G.size(); }
  int m() const { return G.gamma_size(); }

  // The grade family and its per-kind flags are built on first use so that
  // guard-skipped checks on large carriers stay cheap.
  void ensure_family() {
    if (family_ready) return;
    family = enumerate_fuzzy_family(G, grid);
    flags.reserve(family.members.size());
    for (const auto& mu : family.members) {
      std::array<bool, kIdealKindCount> f{};
      for (int k = 0; k < kIdealKindCount; ++k)
        f[static_cast<std::size_t>(k)] =
            check_fuzzy(G, static_cast<IdealKind>(k), mu);
      flags.push_back(f);
    }
    family_ready = true;
  }
  const std::vector<FuzzySubset>& members() {
    ensure_family();
    return family.members;
  }
  bool is(std::size_t i, IdealKind k) const {
    return flags[i][static_cast<std::size_t>(kind_index(k))];
  }
  bool subsets_enumerable() const { return n() <= kMaxEnumerableCarrier; }
  bool endos_enumerable() const { return n() <= kMaxEndoCarrier; }
  const std::vector<Homomorphism>& get_endos() {
    if (!endos_ready) {
      endos = enumerate_endomorphisms(G);
      endos_ready = true;
    }
    return endos;
  }
};

Ctx make_ctx(const GammaSemigroup& G, const GradeGrid& grid) {
  return Ctx{G,
             grid,
             classify(G),
             characteristic(ElementSubset::full(G.size())),
             false,
             {},
             {},
             false,
             {}};
}

bool is_constant(const FuzzySubset& mu) {
  for (int i = 1; i < mu.size(); ++i)
    if (!(mu[i] == mu[0])) return false;
  return true;
}

bool constant_on(const FuzzySubset& mu, const ElementSubset& A) {
  const auto idx = A.indices();
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (!(mu[idx[i]] == mu[idx[0]])) return false;
  return true;
}

std::string skipped_subsets_note() {
  return "carrier exceeds the subset enumeration guard";
}

// ---- bridges between crisp and fuzzy predicates --------------------------

Outcome check_characteristic_bridge(Ctx& ctx, IdealKind kind) {
  if (!ctx.subsets_enumerable()) return skipped(skipped_subsets_note());
  const std::uint64_t top = std::uint64_t{1} << ctx.n();
  Outcome o = pass();
  o.domain = top - 1;
  for (std::uint64_t mask = 1; mask < top; ++mask) {
    const ElementSubset A = ElementSubset::from_mask(ctx.n(), mask);
    const bool crisp = check_crisp(ctx.G, kind, A);
    const bool fuzzy = check_fuzzy(ctx.G, kind, characteristic(A));
    if (crisp != fuzzy) {
      o = fail("A=" + A.str() + " crisp=" + (crisp ? "true" : "false") +
               " fuzzy=" + (fuzzy ? "true" : "false"));
      o.domain = top - 1;
      return o;
    }
  }
  return o;
}

Outcome check_level_cut_bridge(Ctx& ctx, IdealKind kind) {
  for (const auto& mu : ctx.members()) {
    const bool fuzzy = check_fuzzy(ctx.G, kind, mu);
    bool cuts = true;
    std::string bad_cut;
    for (const Grade& t : image_values(mu)) {
      const ElementSubset cut = level_set(mu, t);
      if (!check_crisp(ctx.G, kind, cut)) {
        cuts = false;
        bad_cut = "cut at " + t.str() + " = " + cut.str();
        break;
      }
    }
    if (fuzzy != cuts)
      return fail("mu=" + mu.str() + " fuzzy=" + (fuzzy ? "true" : "false") +
                  (cuts ? " but every attained cut passes"
                        : " but " + bad_cut + " fails"));
  }
  return pass();
}

// ---- section 3 -----------------------------------------------------------

Outcome check_meet_closure(Ctx& ctx) {
  for (IdealKind kind : {IdealKind::subsemigroup, IdealKind::bi})
    for (std::size_t i = 0; i < ctx.members().size(); ++i) {
      if (!ctx.is(i, kind)) continue;
      for (std::size_t j = i; j < ctx.members().size(); ++j) {
        if (!ctx.is(j, kind)) continue;
        const FuzzySubset meet =
            fuzzy_meet(ctx.members()[i], ctx.members()[j]);
        if (meet.empty_support()) continue;
        if (!check_fuzzy(ctx.G, kind, meet))
          return fail("kind=" + std::string(to_string(kind)) +
                      " mu=" + ctx.members()[i].str() +
                      " lambda=" + ctx.members()[j].str() +
                      " meet=" + meet.str());
      }
    }
  return pass();
}

Outcome check_hom_transport(Ctx& ctx, bool via_composition) {
  if (!ctx.endos_enumerable())
    return skipped("carrier exceeds the endomorphism enumeration guard");
  for (const Homomorphism& f : ctx.get_endos()) {
    for (IdealKind kind : {IdealKind::subsemigroup, IdealKind::bi}) {
      for (std::size_t i = 0; i < ctx.members().size(); ++i) {
        if (!ctx.is(i, kind)) continue;
        const FuzzySubset back = via_composition
                                     ? endo_transport(f, ctx.members()[i])
                                     : pullback(f, ctx.members()[i]);
        if (!back.empty_support() && !check_fuzzy(ctx.G, kind, back))
          return fail("kind=" + std::string(to_string(kind)) + " theta=[" +
                      [&] {
                        std::string s;
                        for (int v : f.map) s += std::to_string(v) + " ";
                        if (!s.empty()) s.pop_back();
                        return s;
                      }() +
                      "] mu=" + ctx.members()[i].str() +
                      " transported=" + back.str());
        if (!via_composition && f.surjective) {
          const FuzzySubset fwd = pushforward(f, ctx.members()[i]);
          if (!check_fuzzy(ctx.G, kind, fwd))
            return fail("pushforward kind=" + std::string(to_string(kind)) +
                        " mu=" + ctx.members()[i].str() + " image=" +
                        fwd.str());
        }
      }
    }
  }
  return pass();
}

Outcome check_powers(Ctx& ctx) {
  for (IdealKind kind : {IdealKind::subsemigroup, IdealKind::bi})
    for (std::size_t i = 0; i < ctx.members().size(); ++i) {
      if (!ctx.is(i, kind)) continue;
      for (unsigned k = 0; k <= 3; ++k) {
        const FuzzySubset p = power(ctx.members()[i], k);
        if (!check_fuzzy(ctx.G, kind, p))
          return fail("kind=" + std::string(to_string(kind)) +
                      " mu=" + ctx.members()[i].str() + " k=" +
                      std::to_string(k) + " mu^k=" + p.str());
      }
    }
  return pass();
}

Outcome check_composition_characterization(Ctx& ctx, IdealKind kind) {
  for (std::size_t i = 0; i < ctx.members().size(); ++i) {
    const auto& mu = ctx.members()[i];
    const bool lhs = ctx.is(i, kind);
    bool rhs = leq(compose(ctx.G, mu, mu), mu);
    if (kind == IdealKind::bi && rhs)
      rhs = leq(compose(ctx.G, compose(ctx.G, mu, ctx.chi), mu), mu);
    if (lhs != rhs)
      return fail("mu=" + mu.str() + " predicate=" +
                  (lhs ? "true" : "false") + " composition side=" +
                  (rhs ? "true" : "false"));
  }
  return pass();
}

// ---- section 4 -----------------------------------------------------------

Outcome check_duo_coincidence(Ctx& ctx) {  // T4.7
  if (!ctx.profile.regular) return not_met(theorem_hypothesis(TheoremId::T4_7));
  struct Case {
    bool applies;
    IdealKind one_sided;
    const char* label;
  };
  const Case cases[] = {
      {ctx.profile.left_duo, IdealKind::right, "left duo: fuzzy right"},
      {ctx.profile.right_duo, IdealKind::left, "right duo: fuzzy left"},
      {ctx.profile.duo, IdealKind::two_sided, "duo: fuzzy two-sided"},
  };
  bool any = false;
  for (const auto& c : cases) {
    if (!c.applies) continue;
    any = true;
    for (std::size_t i = 0; i < ctx.members().size(); ++i)
      if (ctx.is(i, c.one_sided) != ctx.is(i, IdealKind::bi))
        return fail(std::string(c.label) + " vs bi differ at mu=" +
                    ctx.members()[i].str());
  }
  if (!any) return not_met(theorem_hypothesis(TheoremId::T4_7));
  return pass();
}

Outcome check_bi_one_two_coincidence(Ctx& ctx) {  // T4.8
  if (!ctx.profile.regular ||
      !(ctx.profile.left_duo || ctx.profile.right_duo))
    return not_met(theorem_hypothesis(TheoremId::T4_8));
  for (std::size_t i = 0; i < ctx.members().size(); ++i)
    if (ctx.is(i, IdealKind::bi) != ctx.is(i, IdealKind::one_two))
      return fail("bi vs (1,2) differ at mu=" + ctx.members()[i].str());
  return pass();
}

Outcome check_fuzzy_duo_equivalence(Ctx& ctx) {  // T4.9
  if (!ctx.profile.regular) return not_met(theorem_hypothesis(TheoremId::T4_9));
  const auto fuzzy_duo = [&](IdealKind side) {
    for (std::size_t i = 0; i < ctx.members().size(); ++i)
      if (ctx.is(i, side) && !ctx.is(i, IdealKind::two_sided)) return false;
    return true;
  };
  const bool fld = fuzzy_duo(IdealKind::left);
  const bool frd = fuzzy_duo(IdealKind::right);
  if (ctx.profile.left_duo != fld)
    return fail(std::string("left duo=") +
                (ctx.profile.left_duo ? "true" : "false") +
                " but fuzzy left duo=" + (fld ? "true" : "false"));
  if (ctx.profile.right_duo != frd)
    return fail(std::string("right duo=") +
                (ctx.profile.right_duo ? "true" : "false") +
                " but fuzzy right duo=" + (frd ? "true" : "false"));
  if (ctx.profile.duo != (fld && frd))
    return fail("duo flag disagrees with the fuzzy sides");
  return pass();
}

Outcome check_bi_absorption_equivalence(Ctx& ctx) {  // T4.10
  if (!ctx.profile.regular)
    return not_met(theorem_hypothesis(TheoremId::T4_10));
  if (!ctx.subsets_enumerable()) return skipped(skipped_subsets_note());
  const auto crisp_bis = enumerate_crisp(ctx.G, IdealKind::bi);
  for (IdealKind target :
       {IdealKind::right, IdealKind::left, IdealKind::two_sided}) {
    bool crisp_side = true;
    for (const auto& I : crisp_bis)
      if (!check_crisp(ctx.G, target, I)) {
        crisp_side = false;
        break;
      }
    bool fuzzy_side = true;
    for (std::size_t i = 0; i < ctx.members().size(); ++i)
      if (ctx.is(i, IdealKind::bi) && !ctx.is(i, target)) {
        fuzzy_side = false;
        break;
      }
    if (crisp_side != fuzzy_side)
      return fail("target=" + std::string(to_string(target)) + " crisp=" +
                  (crisp_side ? "true" : "false") + " fuzzy=" +
                  (fuzzy_side ? "true" : "false"));
  }
  return pass();
}

Outcome check_zero_implies_constant(Ctx& ctx) {  // P4.13
  if (!ctx.profile.left_zero && !ctx.profile.right_zero)
    return not_met(theorem_hypothesis(TheoremId::P4_13));
  if (ctx.profile.left_zero)
    for (std::size_t i = 0; i < ctx.members().size(); ++i)
      if (ctx.is(i, IdealKind::left) && !is_constant(ctx.members()[i]))
        return fail("left zero, non-constant fuzzy left ideal mu=" +
                    ctx.members()[i].str());
  if (ctx.profile.right_zero)
    for (std::size_t i = 0; i < ctx.members().size(); ++i)
      if (ctx.is(i, IdealKind::right) && !is_constant(ctx.members()[i]))
        return fail("right zero, non-constant fuzzy right ideal mu=" +
                    ctx.members()[i].str());
  return pass();
}

Outcome check_idempotent_zero_band(Ctx& ctx, bool require_all_idempotent) {
  // T4.14 (hypothesis: regular) and C4.15 (hypothesis: all idempotent).
  if (require_all_idempotent) {
    if (ctx.profile.idempotents.count() != ctx.n())
      return not_met(theorem_hypothesis(TheoremId::C4_15));
  } else if (!ctx.profile.regular) {
    return not_met(theorem_hypothesis(TheoremId::T4_14));
  }
  const auto idx = ctx.profile.idempotents.indices();
  // Pairwise and parameter-existential, which is what the converse direction
  // actually yields: e = e b f for some b. Requiring one parameter to work
  // for every pair is strictly stronger once |Gamma| > 1 and breaks the
  // equivalence (xy = x + y + g on Z_2 is the smallest counterexample).
  const auto zero_band = [&](bool left) {
    for (int e : idx)
      for (int f : idx) {
        bool some_g = false;
        for (int g = 0; g < ctx.m() && !some_g; ++g)
          some_g = ctx.G.product(e, g, f) == (left ? e : f);
        if (!some_g) return false;
      }
    return true;
  };
  const auto strong_zero_band = [&](bool left) {
    for (int e : idx)
      for (int g = 0; g < ctx.m(); ++g)
        for (int f : idx)
          if (ctx.G.product(e, g, f) != (left ? e : f)) return false;
    return true;
  };
  const auto constant_side = [&](IdealKind side) {
    for (std::size_t i = 0; i < ctx.members().size(); ++i)
      if (ctx.is(i, side) &&
          !constant_on(ctx.members()[i], ctx.profile.idempotents))
        return false;
    return true;
  };
  const bool lz = zero_band(true), lc = constant_side(IdealKind::left);
  if (lz != lc)
    return fail(std::string("idempotents left-zero=") +
                (lz ? "true" : "false") +
                " but fuzzy left ideals constant on them=" +
                (lc ? "true" : "false"));
  const bool rz = zero_band(false), rc = constant_side(IdealKind::right);
  if (rz != rc)
    return fail(std::string("idempotents right-zero=") +
                (rz ? "true" : "false") +
                " but fuzzy right ideals constant on them=" +
                (rc ? "true" : "false"));
  Outcome o = pass();
  o.note = std::string("every-parameter reading ") +
           (strong_zero_band(true) == lz && strong_zero_band(false) == rz
                ? "agrees"
                : "diverges");
  return o;
}

Outcome check_element_regularity_equivalence(Ctx& ctx, TheoremId id) {
  // T4.17: intra-regular vs fuzzy two-sided ideals; T4.18: left/right
  // regular vs fuzzy one-sided ideals. The exponent is existential per
  // element; the global reading is recorded in the note only.
  struct Side {
    bool structural;
    IdealKind kind;
    const char* label;
  };
  std::vector<Side> sides;
  if (id == TheoremId::T4_17)
    sides.push_back({ctx.profile.intra_regular, IdealKind::two_sided,
                     "intra-regular"});
  else {
    sides.push_back({ctx.profile.left_regular, IdealKind::left,
                     "left regular"});
    sides.push_back({ctx.profile.right_regular, IdealKind::right,
                     "right regular"});
  }
  const auto pointwise = [&](const FuzzySubset& mu, int a) {
    for (int b = 0; b < ctx.m(); ++b)
      if (mu[a] == mu[ctx.G.product(a, b, a)]) return true;
    return false;
  };
  std::string note;
  for (const auto& side : sides) {
    bool fuzzy_side = true;
    std::string witness;
    for (std::size_t i = 0; i < ctx.members().size() && fuzzy_side; ++i) {
      if (!ctx.is(i, side.kind)) continue;
      for (int a = 0; a < ctx.n(); ++a)
        if (!pointwise(ctx.members()[i], a)) {
          fuzzy_side = false;
          witness = "mu=" + ctx.members()[i].str() + " a=" + std::to_string(a);
          break;
        }
    }
    if (side.structural != fuzzy_side)
      return fail(std::string(side.label) + "=" +
                  (side.structural ? "true" : "false") + " but fuzzy side=" +
                  (fuzzy_side ? "true" : "false") +
                  (witness.empty() ? "" : " (" + witness + ")"));
    // Informational: does one exponent work uniformly per ideal?
    bool global = true;
    for (std::size_t i = 0; i < ctx.members().size() && global; ++i) {
      if (!ctx.is(i, side.kind)) continue;
      bool some_b = false;
      for (int b = 0; b < ctx.m() && !some_b; ++b) {
        bool all_a = true;
        for (int a = 0; a < ctx.n(); ++a)
          if (!(ctx.members()[i][a] ==
                ctx.members()[i][ctx.G.product(a, b, a)])) {
            all_a = false;
            break;
          }
        some_b = all_a;
      }
      global = some_b;
    }
    if (!note.empty()) note += "; ";
    note += std::string(side.label) + " global-exponent reading " +
            (global == side.structural ? "agrees" : "diverges");
  }
  Outcome o = pass();
  o.note = note;
  return o;
}

Outcome check_bi_meet_below_composition(Ctx& ctx) {  // P4.19
  if (!ctx.profile.regular || !ctx.profile.intra_regular)
    return not_met(theorem_hypothesis(TheoremId::P4_19));
  for (std::size_t i = 0; i < ctx.members().size(); ++i) {
    if (!ctx.is(i, IdealKind::bi)) continue;
    for (std::size_t j = 0; j < ctx.members().size(); ++j) {
      if (!ctx.is(j, IdealKind::bi)) continue;
      const auto& mu = ctx.members()[i];
      const auto& la = ctx.members()[j];
      const FuzzySubset meet = fuzzy_meet(mu, la);
      const FuzzySubset ml = compose(ctx.G, mu, la);
      if (!leq(meet, ml))
        return fail("mu=" + mu.str() + " lambda=" + la.str() +
                    " meet exceeds mu o lambda=" + ml.str());
      if (!leq(meet, fuzzy_meet(ml, compose(ctx.G, la, mu))))
        return fail("mu=" + mu.str() + " lambda=" + la.str() +
                    " meet exceeds (mu o lambda) meet (lambda o mu)");
    }
  }
  return pass();
}

Outcome check_simple_constant_equivalence(Ctx& ctx) {  // T4.24
  struct Case {
    bool structural;
    IdealKind kind;
    const char* label;
  };
  const Case cases[] = {
      {ctx.profile.left_simple, IdealKind::left, "left simple"},
      {ctx.profile.right_simple, IdealKind::right, "right simple"},
      {ctx.profile.simple, IdealKind::two_sided, "simple"},
  };
  for (const auto& c : cases) {
    bool all_const = true;
    std::string witness;
    for (std::size_t i = 0; i < ctx.members().size(); ++i)
      if (ctx.is(i, c.kind) && !is_constant(ctx.members()[i])) {
        all_const = false;
        witness = ctx.members()[i].str();
        break;
      }
    if (c.structural != all_const)
      return fail(std::string(c.label) + "=" +
                  (c.structural ? "true" : "false") +
                  " but constant fuzzy side=" + (all_const ? "true" : "false") +
                  (witness.empty() ? "" : " (mu=" + witness + ")"));
  }
  return pass();
}

Outcome check_simple_bi_absorption(Ctx& ctx) {  // T4.25
  if (!ctx.profile.left_simple && !ctx.profile.right_simple)
    return not_met(theorem_hypothesis(TheoremId::T4_25));
  if (ctx.profile.left_simple)
    for (std::size_t i = 0; i < ctx.members().size(); ++i)
      if (ctx.is(i, IdealKind::bi) && !ctx.is(i, IdealKind::right))
        return fail("left simple, fuzzy bi not fuzzy right: mu=" +
                    ctx.members()[i].str());
  if (ctx.profile.right_simple)
    for (std::size_t i = 0; i < ctx.members().size(); ++i)
      if (ctx.is(i, IdealKind::bi) && !ctx.is(i, IdealKind::left))
        return fail("right simple, fuzzy bi not fuzzy left: mu=" +
                    ctx.members()[i].str());
  return pass();
}

// ---- section 5 -----------------------------------------------------------

Outcome check_quasi_between(Ctx& ctx) {  // P5.2
  for (std::size_t i = 0; i < ctx.members().size(); ++i) {
    if ((ctx.is(i, IdealKind::left) || ctx.is(i, IdealKind::right)) &&
        !ctx.is(i, IdealKind::quasi))
      return fail("one-sided but not quasi: mu=" + ctx.members()[i].str());
    if (ctx.is(i, IdealKind::quasi) && !ctx.is(i, IdealKind::bi))
      return fail("quasi but not bi: mu=" + ctx.members()[i].str());
  }
  return pass();
}

Outcome check_quasi_decomposition(Ctx& ctx) {  // P5.3
  for (std::size_t i = 0; i < ctx.members().size(); ++i) {
    if (!ctx.is(i, IdealKind::quasi)) continue;
    const auto& mu = ctx.members()[i];
    const FuzzySubset right_part =
        fuzzy_join(mu, compose(ctx.G, mu, ctx.chi));
    const FuzzySubset left_part = fuzzy_join(compose(ctx.G, ctx.chi, mu), mu);
    if (!check_fuzzy(ctx.G, IdealKind::right, right_part))
      return fail("mu=" + mu.str() + ": mu join (mu o chi) not a fuzzy right "
                  "ideal");
    if (!check_fuzzy(ctx.G, IdealKind::left, left_part))
      return fail("mu=" + mu.str() + ": (chi o mu) join mu not a fuzzy left "
                  "ideal");
    if (!(fuzzy_meet(right_part, left_part) == mu))
      return fail("mu=" + mu.str() + ": decomposition meet differs");
  }
  for (std::size_t i = 0; i < ctx.members().size(); ++i) {
    if (!ctx.is(i, IdealKind::right)) continue;
    for (std::size_t j = 0; j < ctx.members().size(); ++j) {
      if (!ctx.is(j, IdealKind::left)) continue;
      const FuzzySubset meet =
          fuzzy_meet(ctx.members()[i], ctx.members()[j]);
      if (meet.empty_support()) continue;
      if (!check_fuzzy(ctx.G, IdealKind::quasi, meet))
        return fail("right mu=" + ctx.members()[i].str() + " left lambda=" +
                    ctx.members()[j].str() + " meet not quasi");
    }
  }
  return pass();
}

Outcome check_composition_kind(Ctx& ctx, IdealKind result_kind,
                               std::string_view hypothesis) {  // C5.4, P5.5
  if (!ctx.profile.regular) return not_met(hypothesis);
  for (std::size_t i = 0; i < ctx.members().size(); ++i) {
    if (!ctx.is(i, IdealKind::right)) continue;
    for (std::size_t j = 0; j < ctx.members().size(); ++j) {
      if (!ctx.is(j, IdealKind::left)) continue;
      const FuzzySubset prod =
          compose(ctx.G, ctx.members()[i], ctx.members()[j]);
      if (prod.empty_support()) continue;
      if (!check_fuzzy(ctx.G, result_kind, prod))
        return fail("mu=" + ctx.members()[i].str() + " lambda=" +
                    ctx.members()[j].str() + " mu o lambda=" + prod.str() +
                    " not " + std::string(to_string(result_kind)));
    }
  }
  return pass();
}

Outcome check_pullback_inclusions(Ctx& ctx) {  // P5.8
  if (!ctx.endos_enumerable())
    return skipped("carrier exceeds the endomorphism enumeration guard");
  for (const Homomorphism& f : ctx.get_endos()) {
    const FuzzySubset back_chi = pullback(f, ctx.chi);
    for (std::size_t i = 0; i < ctx.members().size(); ++i) {
      const FuzzySubset back = pullback(f, ctx.members()[i]);
      if (back.empty_support()) continue;
      if (ctx.is(i, IdealKind::left) &&
          !leq(compose(ctx.G, back_chi, back), back))
        return fail("left lambda=" + ctx.members()[i].str() +
                    ": chi o pullback exceeds pullback");
      if (ctx.is(i, IdealKind::right) &&
          !leq(compose(ctx.G, back, back_chi), back))
        return fail("right lambda=" + ctx.members()[i].str() +
                    ": pullback o chi exceeds pullback");
    }
  }
  return pass();
}

Outcome check_pullback_quasi(Ctx& ctx) {  // P5.9
  if (!ctx.endos_enumerable())
    return skipped("carrier exceeds the endomorphism enumeration guard");
  for (const Homomorphism& f : ctx.get_endos())
    for (std::size_t i = 0; i < ctx.members().size(); ++i) {
      if (!ctx.is(i, IdealKind::quasi)) continue;
      const FuzzySubset back = pullback(f, ctx.members()[i]);
      if (back.empty_support()) continue;
      if (!check_fuzzy(ctx.G, IdealKind::quasi, back))
        return fail("lambda=" + ctx.members()[i].str() + " pullback=" +
                    back.str() + " not quasi");
    }
  return pass();
}

Outcome check_pushforward_inclusions(Ctx& ctx) {  // P5.10
  if (!ctx.endos_enumerable())
    return skipped("carrier exceeds the endomorphism enumeration guard");
  for (const Homomorphism& f : ctx.get_endos()) {
    if (!f.surjective) continue;
    const FuzzySubset fwd_chi = pushforward(f, ctx.chi);
    for (std::size_t i = 0; i < ctx.members().size(); ++i) {
      const FuzzySubset fwd = pushforward(f, ctx.members()[i]);
      if (ctx.is(i, IdealKind::left) &&
          !leq(compose(ctx.G, fwd_chi, fwd), fwd))
        return fail("left lambda=" + ctx.members()[i].str() +
                    ": chi o pushforward exceeds pushforward");
      if (ctx.is(i, IdealKind::right) &&
          !leq(compose(ctx.G, fwd, fwd_chi), fwd))
        return fail("right lambda=" + ctx.members()[i].str() +
                    ": pushforward o chi exceeds pushforward");
    }
  }
  return pass();
}

Outcome check_pushforward_quasi(Ctx& ctx) {  // P5.11
  if (!ctx.endos_enumerable())
    return skipped("carrier exceeds the endomorphism enumeration guard");
  for (const Homomorphism& f : ctx.get_endos()) {
    if (!f.surjective) continue;
    for (std::size_t i = 0; i < ctx.members().size(); ++i) {
      if (!ctx.is(i, IdealKind::quasi)) continue;
      const FuzzySubset fwd = pushforward(f, ctx.members()[i]);
      if (!check_fuzzy(ctx.G, IdealKind::quasi, fwd))
        return fail("lambda=" + ctx.members()[i].str() + " image=" +
                    fwd.str() + " not quasi");
    }
  }
  return pass();
}

Outcome check_characteristic_calculus(Ctx& ctx) {  // L5.12
  if (!ctx.subsets_enumerable()) return skipped(skipped_subsets_note());
  const std::uint64_t top = std::uint64_t{1} << ctx.n();
  Outcome done = pass();
  done.domain = top * top;  // ordered subset pairs, empties included
  const auto failed = [&](std::string witness) {
    Outcome o = fail(std::move(witness));
    o.domain = top * top;
    return o;
  };
  for (std::uint64_t ma = 0; ma < top; ++ma) {
    const ElementSubset A = ElementSubset::from_mask(ctx.n(), ma);
    const FuzzySubset ca = characteristic(A);
    for (std::uint64_t mb = 0; mb < top; ++mb) {
      const ElementSubset B = ElementSubset::from_mask(ctx.n(), mb);
      const FuzzySubset cb = characteristic(B);
      if (A.subset_of(B) != leq(ca, cb))
        return failed("A=" + A.str() + " B=" + B.str() +
                      ": order bridge disagrees");
      if (!(fuzzy_meet(ca, cb) == characteristic(A & B)))
        return failed("A=" + A.str() + " B=" + B.str() +
                      ": meet of characteristics is not the intersection's");
      if (!(compose(ctx.G, ca, cb) ==
            characteristic(subset_product(ctx.G, A, B))))
        return failed("A=" + A.str() + " B=" + B.str() +
                      ": composition differs from the product set's "
                      "characteristic");
    }
  }
  return done;
}

Outcome check_regularity_fourfold(Ctx& ctx) {  // T5.13
  const bool b1 = ctx.profile.regular;

  bool b2 = true;
  std::string w2;
  for (std::size_t i = 0; i < ctx.members().size() && b2; ++i) {
    if (!ctx.is(i, IdealKind::right)) continue;
    for (std::size_t j = 0; j < ctx.members().size(); ++j) {
      if (!ctx.is(j, IdealKind::left)) continue;
      if (!(compose(ctx.G, ctx.members()[i], ctx.members()[j]) ==
            fuzzy_meet(ctx.members()[i], ctx.members()[j]))) {
        b2 = false;
        w2 = "mu=" + ctx.members()[i].str() + " lambda=" +
             ctx.members()[j].str();
        break;
      }
    }
  }

  bool b3 = true;
  std::string w3;
  for (std::size_t i = 0; i < ctx.members().size() && b3; ++i) {
    const auto& mu = ctx.members()[i];
    if (ctx.is(i, IdealKind::right) && !(compose(ctx.G, mu, mu) == mu)) {
      b3 = false;
      w3 = "right mu=" + mu.str() + " not composition-idempotent";
    }
    if (b3 && ctx.is(i, IdealKind::left) && !(compose(ctx.G, mu, mu) == mu)) {
      b3 = false;
      w3 = "left lambda=" + mu.str() + " not composition-idempotent";
    }
  }
  for (std::size_t i = 0; i < ctx.members().size() && b3; ++i) {
    if (!ctx.is(i, IdealKind::right)) continue;
    for (std::size_t j = 0; j < ctx.members().size(); ++j) {
      if (!ctx.is(j, IdealKind::left)) continue;
      const FuzzySubset prod =
          compose(ctx.G, ctx.members()[i], ctx.members()[j]);
      if (prod.empty_support()) continue;
      if (!check_fuzzy(ctx.G, IdealKind::quasi, prod)) {
        b3 = false;
        w3 = "mu o lambda not quasi for mu=" + ctx.members()[i].str() +
             " lambda=" + ctx.members()[j].str();
        break;
      }
    }
  }

  bool b4 = true;
  std::string w4;
  for (std::size_t i = 0; i < ctx.members().size(); ++i) {
    if (!ctx.is(i, IdealKind::quasi)) continue;
    const auto& d = ctx.members()[i];
    if (!(compose(ctx.G, compose(ctx.G, d, ctx.chi), d) == d)) {
      b4 = false;
      w4 = "delta=" + d.str();
      break;
    }
  }

  if (b2 != b1)
    return fail(std::string("regular=") + (b1 ? "true" : "false") +
                " but composition-equals-meet=" + (b2 ? "true" : "false") +
                (w2.empty() ? "" : " (" + w2 + ")"));
  if (b3 != b1)
    return fail(std::string("regular=") + (b1 ? "true" : "false") +
                " but one-sided idempotence/quasi-product side=" +
                (b3 ? "true" : "false") + (w3.empty() ? "" : " (" + w3 + ")"));
  if (b4 != b1)
    return fail(std::string("regular=") + (b1 ? "true" : "false") +
                " but delta = delta o chi o delta side=" +
                (b4 ? "true" : "false") + (w4.empty() ? "" : " (" + w4 + ")"));
  return pass();
}

bool crisp_quasi_idempotent(Ctx& ctx) {
  for (const auto& Q : enumerate_crisp(ctx.G, IdealKind::quasi))
    if (!(subset_product(ctx.G, Q, Q) == Q)) return false;
  return true;
}

Outcome check_quasi_idempotent_structural(Ctx& ctx) {  // T5.14
  if (!ctx.subsets_enumerable()) return skipped(skipped_subsets_note());
  const bool structural = ctx.profile.regular && ctx.profile.intra_regular;
  const bool products = crisp_quasi_idempotent(ctx);
  Outcome o =
      structural == products
          ? pass()
          : fail(std::string("regular and intra-regular=") +
                 (structural ? "true" : "false") +
                 " but every quasi ideal idempotent=" +
                 (products ? "true" : "false"));
  o.domain = (std::uint64_t{1} << ctx.n()) - 1;
  return o;
}

Outcome check_quasi_idempotent_bridge(Ctx& ctx) {  // T5.15
  if (!ctx.subsets_enumerable()) return skipped(skipped_subsets_note());
  const bool crisp_side = crisp_quasi_idempotent(ctx);
  bool fuzzy_side = true;
  std::string witness;
  for (std::size_t i = 0; i < ctx.members().size(); ++i) {
    if (!ctx.is(i, IdealKind::quasi)) continue;
    const auto& d = ctx.members()[i];
    if (!(compose(ctx.G, d, d) == d)) {
      fuzzy_side = false;
      witness = d.str();
      break;
    }
  }
  if (crisp_side != fuzzy_side)
    return fail(std::string("crisp side=") + (crisp_side ? "true" : "false") +
                " fuzzy side=" + (fuzzy_side ? "true" : "false") +
                (witness.empty() ? "" : " (delta=" + witness + ")"));
  return pass();
}

Outcome check_idempotent_threefold(Ctx& ctx) {  // T5.16
  const bool structural = ctx.profile.regular && ctx.profile.intra_regular;
  const auto idempotent_family = [&](IdealKind kind, std::string& witness) {
    for (std::size_t i = 0; i < ctx.members().size(); ++i) {
      if (!ctx.is(i, kind)) continue;
      const auto& mu = ctx.members()[i];
      if (!(compose(ctx.G, mu, mu) == mu)) {
        witness = mu.str();
        return false;
      }
    }
    return true;
  };
  std::string wq, wb;
  const bool fq = idempotent_family(IdealKind::quasi, wq);
  const bool fb = idempotent_family(IdealKind::bi, wb);
  if (fq != structural)
    return fail(std::string("regular and intra-regular=") +
                (structural ? "true" : "false") + " but fuzzy quasi side=" +
                (fq ? "true" : "false") + (wq.empty() ? "" : " (mu=" + wq + ")"));
  if (fb != structural)
    return fail(std::string("regular and intra-regular=") +
                (structural ? "true" : "false") + " but fuzzy bi side=" +
                (fb ? "true" : "false") + (wb.empty() ? "" : " (mu=" + wb + ")"));
  return pass();
}

Outcome check_quasi_pointwise(Ctx& ctx, QuasiPointwiseVariant variant) {
  for (std::size_t i = 0; i < ctx.members().size(); ++i) {
    const bool lhs = ctx.is(i, IdealKind::quasi);
    const bool rhs =
        check_fuzzy_quasi_pointwise(ctx.G, ctx.members()[i], variant);
    if (lhs != rhs)
      return fail("mu=" + ctx.members()[i].str() + " quasi=" +
                  (lhs ? "true" : "false") + " pointwise=" +
                  (rhs ? "true" : "false"));
  }
  return pass();
}

Outcome dispatch(TheoremId id, Ctx& ctx) {
  switch (id) {
    case TheoremId::T3_4:
      return check_characteristic_bridge(ctx, IdealKind::subsemigroup);
    case TheoremId::T3_5:
      return check_characteristic_bridge(ctx, IdealKind::bi);
    case TheoremId::T3_6:
      return check_level_cut_bridge(ctx, IdealKind::subsemigroup);
    case TheoremId::T3_7:
      return check_level_cut_bridge(ctx, IdealKind::bi);
    case TheoremId::P3_8:
      return check_meet_closure(ctx);
    case TheoremId::P3_9:
      return check_hom_transport(ctx, false);
    case TheoremId::P3_10:
      return check_hom_transport(ctx, true);
    case TheoremId::P3_11:
      return check_powers(ctx);
    case TheoremId::T3_12:
      return check_composition_characterization(ctx, IdealKind::subsemigroup);
    case TheoremId::T3_13:
      return check_composition_characterization(ctx, IdealKind::bi);
    case TheoremId::T4_7:
      return check_duo_coincidence(ctx);
    case TheoremId::T4_8:
      return check_bi_one_two_coincidence(ctx);
    case TheoremId::T4_9:
      return check_fuzzy_duo_equivalence(ctx);
    case TheoremId::T4_10:
      return check_bi_absorption_equivalence(ctx);
    case TheoremId::P4_13:
      return check_zero_implies_constant(ctx);
    case TheoremId::T4_14:
      return check_idempotent_zero_band(ctx, false);
    case TheoremId::C4_15:
      return check_idempotent_zero_band(ctx, true);
    case TheoremId::T4_17:
      return check_element_regularity_equivalence(ctx, TheoremId::T4_17);
    case TheoremId::T4_18:
      return check_element_regularity_equivalence(ctx, TheoremId::T4_18);
    case TheoremId::P4_19:
      return check_bi_meet_below_composition(ctx);
    case TheoremId::T4_24:
      return check_simple_constant_equivalence(ctx);
    case TheoremId::T4_25:
      return check_simple_bi_absorption(ctx);
    case TheoremId::P5_2:
      return check_quasi_between(ctx);
    case TheoremId::P5_3:
      return check_quasi_decomposition(ctx);
    case TheoremId::C5_4:
      return check_composition_kind(ctx, IdealKind::quasi,
                                    theorem_hypothesis(TheoremId::C5_4));
    case TheoremId::P5_5:
      return check_composition_kind(ctx, IdealKind::bi,
                                    theorem_hypothesis(TheoremId::P5_5));
    case TheoremId::T5_6:
      return check_characteristic_bridge(ctx, IdealKind::quasi);
    case TheoremId::T5_7:
      return check_level_cut_bridge(ctx, IdealKind::quasi);
    case TheoremId::P5_8:
      return check_pullback_inclusions(ctx);
    case TheoremId::P5_9:
      return check_pullback_quasi(ctx);
    case TheoremId::P5_10:
      return check_pushforward_inclusions(ctx);
    case TheoremId::P5_11:
      return check_pushforward_quasi(ctx);
    case TheoremId::L5_12:
      return check_characteristic_calculus(ctx);
    case TheoremId::T5_13:
      return check_regularity_fourfold(ctx);
    case TheoremId::T5_14:
      return check_quasi_idempotent_structural(ctx);
    case TheoremId::T5_15:
      return check_quasi_idempotent_bridge(ctx);
    case TheoremId::T5_16:
      return check_idempotent_threefold(ctx);
    case TheoremId::T5_17:
      return check_quasi_pointwise(ctx, QuasiPointwiseVariant::min_form);
    case TheoremId::T5_18:
      return check_quasi_pointwise(ctx, QuasiPointwiseVariant::maxmin_form);
  }
  throw std::logic_error("unknown theorem id");
}

TheoremReport finalize(TheoremId id, Outcome outcome, const Ctx& ctx,
                       const std::string& instance_id) {
  TheoremReport r;
  r.id = id;
  r.instance_id = instance_id;
  r.status = outcome.status;
  r.witness = std::move(outcome.witness);
  r.note = std::move(outcome.note);
  r.family.grid_levels = ctx.grid.size();
  r.family.family_size = outcome.domain.value_or(
      ctx.family_ready ? ctx.family.members.size() : 0);
  r.family.truncated = ctx.family_ready && ctx.family.truncated;
  return r;
}

}  // namespace

TheoremReport run_check(TheoremId id, const GammaSemigroup& G,
                        const GradeGrid& grid,
                        const std::string& instance_id) {
  Ctx ctx = make_ctx(G, grid);
  return finalize(id, dispatch(id, ctx), ctx, instance_id);
}

CorpusReport verify_corpus(const std::vector<CorpusInstance>& corpus,
                           const GradeGrid& grid,
                           const std::vector<TheoremId>& theorems) {
  CorpusReport report;
  report.corpus = corpus;

  // Results come out sorted by catalog position first, instance order second.
  std::vector<TheoremId> ordered;
  for (TheoremId id : theorem_catalog())
    if (std::find(theorems.begin(), theorems.end(), id) != theorems.end())
      ordered.push_back(id);

  std::vector<std::vector<TheoremReport>> per_theorem(ordered.size());
  for (const CorpusInstance& inst : corpus) {
    Ctx ctx = make_ctx(inst.structure, grid);
    for (std::size_t t = 0; t < ordered.size(); ++t)
      per_theorem[t].push_back(
          finalize(ordered[t], dispatch(ordered[t], ctx), ctx, inst.id));
  }
  for (auto& group : per_theorem)
    for (auto& r : group) {
      switch (r.status) {
        case CheckStatus::verified: ++report.verified; break;
        case CheckStatus::counterexample: ++report.counterexamples; break;
        case CheckStatus::hypothesis_not_met: ++report.hypothesis_not_met; break;
        case CheckStatus::skipped: ++report.skipped; break;
      }
      report.results.push_back(std::move(r));
    }
  return report;
}

}  // namespace gsg
