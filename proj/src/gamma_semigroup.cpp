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

#include "gsg/gamma_semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gsg {

TableValidation validate_table(int n, int m, const std::vector<int>& table) {
  TableValidation v;
  v.n = n;
  v.m = m;
  if (n < 1 || m < 1) {
    v.shape_ok = false;
    v.expected_entries = 0;
    v.actual_entries = table.size();
    return v;
  }
  v.expected_entries = static_cast<std::size_t>(n) * m * n;
  v.actual_entries = table.size();
  v.shape_ok = v.expected_entries == v.actual_entries;
  if (!v.shape_ok) return v;

  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g)
      for (int y = 0; y < n; ++y) {
        const int val = table[(static_cast<std::size_t>(x) * m + g) * n + y];
        if (val < 0 || val >= n) v.range_violations.push_back({x, g, y, val});
      }
  if (!v.range_violations.empty()) return v;

  const auto at = [&](int x, int g, int y) {
    return table[(static_cast<std::size_t>(x) * m + g) * n + y];
  };
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < m; ++b)
      for (int y = 0; y < n; ++y)
        for (int g = 0; g < m; ++g)
          for (int z = 0; z < n; ++z) {
            const int lhs = at(at(x, b, y), g, z);
            const int rhs = at(x, b, at(y, g, z));
            if (lhs != rhs) v.assoc_violations.push_back({x, b, y, g, z, lhs, rhs});
          }
  if (!v.assoc_violations.empty()) return v;

  v.structure = GammaSemigroup(n, m, table, GammaSemigroup::Unchecked{});
  return v;
}

GammaSemigroup::GammaSemigroup(int n, int m, std::vector<int> table)
    : n_(n), m_(m), table_(std::move(table)) {
  TableValidation v = validate_table(n_, m_, table_);
  if (v.ok()) return;
  std::ostringstream msg;
  if (!v.shape_ok) {
    msg << "bad table shape: expected " << v.expected_entries
        << " entries for n=" << n_ << " m=" << m_ << ", got "
        << v.actual_entries;
  } else if (!v.range_violations.empty()) {
    const auto& r = v.range_violations.front();
    msg << "entry out of range at x=" << r.x << " gamma=" << r.gamma
        << " y=" << r.y << ": " << r.value << " (" << v.range_violations.size()
        << " total)";
  } else {
    const auto& a = v.assoc_violations.front();
    msg << "not associative: (" << a.x << " " << a.beta << " " << a.y << ") "
        << a.gamma << " " << a.z << " = " << a.lhs << " but " << a.x << " "
        << a.beta << " (" << a.y << " " << a.gamma << " " << a.z
        << ") = " << a.rhs << " (" << v.assoc_violations.size() << " total)";
  }
  throw std::invalid_argument(msg.str());
}

ElementSubset ElementSubset::of(int universe_size,
                                const std::vector<int>& indices) {
  ElementSubset s(universe_size);
  for (int i : indices) {
    if (i < 0 || i >= universe_size)
      throw std::invalid_argument("subset: index out of range");
    s.insert(i);
  }
  return s;
}

ElementSubset ElementSubset::from_mask(int universe_size, std::uint64_t mask) {
  if (universe_size > 63)
    throw std::invalid_argument("subset: mask form limited to 63 elements");
  ElementSubset s(universe_size);
  for (int i = 0; i < universe_size; ++i)
    if (mask & (std::uint64_t{1} << i)) s.insert(i);
  return s;
}

int ElementSubset::count() const noexcept {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::uint64_t ElementSubset::mask() const {
  if (universe_size() > 63)
    throw std::invalid_argument("subset: mask form limited to 63 elements");
  std::uint64_t m = 0;
  for (int i = 0; i < universe_size(); ++i)
    if (bits_[static_cast<std::size_t>(i)]) m |= std::uint64_t{1} << i;
  return m;
}

std::vector<int> ElementSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < universe_size(); ++i)
    if (bits_[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

std::string ElementSubset::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

bool ElementSubset::subset_of(const ElementSubset& other) const {
  if (bits_.size() != other.bits_.size())
    throw std::invalid_argument("subset: mismatched carriers");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

ElementSubset operator&(const ElementSubset& a, const ElementSubset& b) {
  if (a.bits_.size() != b.bits_.size())
    throw std::invalid_argument("subset: mismatched carriers");
  ElementSubset r(a.universe_size());
  for (std::size_t i = 0; i < a.bits_.size(); ++i)
    r.bits_[i] = a.bits_[i] && b.bits_[i];
  return r;
}

ElementSubset operator|(const ElementSubset& a, const ElementSubset& b) {
  if (a.bits_.size() != b.bits_.size())
    throw std::invalid_argument("subset: mismatched carriers");
  ElementSubset r(a.universe_size());
  for (std::size_t i = 0; i < a.bits_.size(); ++i)
    r.bits_[i] = a.bits_[i] || b.bits_[i];
  return r;
}

std::string_view to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::subsemigroup: return "subsemigroup";
    case IdealKind::left: return "left";
    case IdealKind::right: return "right";
    case IdealKind::two_sided: return "two_sided";
    case IdealKind::bi: return "bi";
    case IdealKind::one_two: return "one_two";
    case IdealKind::quasi: return "quasi";
  }
  return "?";
}

std::optional<IdealKind> parse_ideal_kind(std::string_view text) {
  for (int i = 0; i < kIdealKindCount; ++i) {
    const auto k = static_cast<IdealKind>(i);
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

ElementSubset subset_product(const GammaSemigroup& G, const ElementSubset& A,
                             const ElementSubset& B) {
  const int n = G.size();
  if (A.universe_size() != n || B.universe_size() != n)
    throw std::invalid_argument("subset_product: mismatched carriers");
  ElementSubset out(n);
  for (int a = 0; a < n; ++a) {
    if (!A.contains(a)) continue;
    for (int g = 0; g < G.gamma_size(); ++g)
      for (int b = 0; b < n; ++b)
        if (B.contains(b)) out.insert(G.product(a, g, b));
  }
  return out;
}

namespace {

void require_bound(const GammaSemigroup& G, const ElementSubset& I,
                   const char* who) {
  if (I.universe_size() != G.size())
    throw std::invalid_argument(std::string(who) + ": mismatched carrier");
  if (I.empty())
    throw std::invalid_argument(std::string(who) + ": empty subset");
}

std::optional<std::string> escape_of(const GammaSemigroup& G,
                                     const ElementSubset& P,
                                     const ElementSubset& I,
                                     const char* label) {
  // First element of P Gamma I... caller passes a product set; here we just
  // report the first member of P missing from I.
  for (int i = 0; i < G.size(); ++i)
    if (P.contains(i) && !I.contains(i))
      return std::string(label) + " contains " + std::to_string(i) +
             " outside the subset";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> crisp_violation(const GammaSemigroup& G,
                                           IdealKind kind,
                                           const ElementSubset& I) {
  require_bound(G, I, "check_crisp");
  const ElementSubset S = ElementSubset::full(G.size());
  const auto closed_under = [&](const ElementSubset& P, const char* label) {
    return escape_of(G, P, I, label);
  };
  switch (kind) {
    case IdealKind::subsemigroup:
      return closed_under(subset_product(G, I, I), "I Gamma I");
    case IdealKind::left:
      return closed_under(subset_product(G, S, I), "S Gamma I");
    case IdealKind::right:
      return closed_under(subset_product(G, I, S), "I Gamma S");
    case IdealKind::two_sided: {
      if (auto v = closed_under(subset_product(G, S, I), "S Gamma I")) return v;
      return closed_under(subset_product(G, I, S), "I Gamma S");
    }
    case IdealKind::bi: {
      if (auto v = closed_under(subset_product(G, I, I), "I Gamma I")) return v;
      return closed_under(subset_product(G, subset_product(G, I, S), I),
                          "I Gamma S Gamma I");
    }
    case IdealKind::one_two: {
      if (auto v = closed_under(subset_product(G, I, I), "I Gamma I")) return v;
      const ElementSubset isii =
          subset_product(G, subset_product(G, subset_product(G, I, S), I), I);
      return closed_under(isii, "I Gamma S Gamma I Gamma I");
    }
    case IdealKind::quasi:
      return closed_under(
          subset_product(G, S, I) & subset_product(G, I, S),
          "S Gamma I intersect I Gamma S");
  }
  return std::nullopt;
}

bool check_crisp(const GammaSemigroup& G, IdealKind kind,
                 const ElementSubset& I) {
  return !crisp_violation(G, kind, I).has_value();
}

ElementSubset generate_ideal(const GammaSemigroup& G, IdealKind kind, int a) {
  const int n = G.size();
  if (a < 0 || a >= n)
    throw std::invalid_argument("generate_ideal: element out of range");
  const ElementSubset S = ElementSubset::full(n);
  ElementSubset seed(n);
  seed.insert(a);

  if (kind == IdealKind::quasi) {
    const ElementSubset q =
        seed | (subset_product(G, seed, S) & subset_product(G, S, seed));
    if (!check_crisp(G, IdealKind::quasi, q))
      throw std::logic_error("generate_ideal: quasi construction failed");
    return q;
  }
  if (kind != IdealKind::left && kind != IdealKind::right &&
      kind != IdealKind::two_sided)
    throw std::invalid_argument("generate_ideal: unsupported kind");

  ElementSubset x = seed;
  for (;;) {
    ElementSubset grown = x;
    if (kind == IdealKind::left || kind == IdealKind::two_sided)
      grown = grown | subset_product(G, S, x);
    if (kind == IdealKind::right || kind == IdealKind::two_sided)
      grown = grown | subset_product(G, x, S);
    if (grown == x) return x;
    x = grown;
  }
}

std::vector<ElementSubset> enumerate_crisp(const GammaSemigroup& G,
                                           IdealKind kind) {
  const int n = G.size();
  if (n > kMaxEnumerableCarrier)
    throw std::invalid_argument("enumerate_crisp: carrier too large");
  std::vector<ElementSubset> out;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < top; ++mask) {
    ElementSubset I = ElementSubset::from_mask(n, mask);
    if (check_crisp(G, kind, I)) out.push_back(std::move(I));
  }
  return out;
}

StructureProfile classify(const GammaSemigroup& G) {
  const int n = G.size();
  const int m = G.gamma_size();
  StructureProfile p;
  p.idempotents = ElementSubset(n);

  for (int e = 0; e < n; ++e)
    for (int g = 0; g < m; ++g)
      if (G.product(e, g, e) == e) {
        p.idempotents.insert(e);
        break;
      }

  const auto all_elements = [&](auto&& pred) {
    for (int a = 0; a < n; ++a)
      if (!pred(a)) return false;
    return true;
  };

  p.regular = all_elements([&](int a) {
    for (int al = 0; al < m; ++al)
      for (int x = 0; x < n; ++x)
        for (int be = 0; be < m; ++be)
          if (G.product3(a, al, x, be, a) == a) return true;
    return false;
  });

  p.left_regular = all_elements([&](int a) {
    for (int x = 0; x < n; ++x)
      for (int al = 0; al < m; ++al)
        for (int be = 0; be < m; ++be)
          if (G.product3(x, al, a, be, a) == a) return true;
    return false;
  });

  p.right_regular = all_elements([&](int a) {
    for (int x = 0; x < n; ++x)
      for (int al = 0; al < m; ++al)
        for (int be = 0; be < m; ++be)
          if (G.product3(a, be, a, al, x) == a) return true;
    return false;
  });

  p.intra_regular = all_elements([&](int a) {
    for (int x = 0; x < n; ++x)
      for (int al = 0; al < m; ++al)
        for (int be = 0; be < m; ++be) {
          const int head = G.product3(x, al, a, be, a);
          for (int ga = 0; ga < m; ++ga)
            for (int y = 0; y < n; ++y)
              if (G.product(head, ga, y) == a) return true;
        }
    return false;
  });

  p.left_zero = true;
  p.right_zero = true;
  for (int x = 0; x < n && (p.left_zero || p.right_zero); ++x)
    for (int g = 0; g < m; ++g)
      for (int y = 0; y < n; ++y) {
        const int v = G.product(x, g, y);
        if (v != x) p.left_zero = false;
        if (v != y) p.right_zero = false;
      }

  // Simplicity and duo through principal ideals: every one-sided ideal is a
  // union of principal ones, so quantifying over generators is exact.
  p.left_simple = true;
  p.right_simple = true;
  p.simple = true;
  p.left_duo = true;
  p.right_duo = true;
  for (int a = 0; a < n; ++a) {
    const ElementSubset la = generate_ideal(G, IdealKind::left, a);
    const ElementSubset ra = generate_ideal(G, IdealKind::right, a);
    const ElementSubset ja = generate_ideal(G, IdealKind::two_sided, a);
    if (la.count() != n) p.left_simple = false;
    if (ra.count() != n) p.right_simple = false;
    if (ja.count() != n) p.simple = false;
    if (!check_crisp(G, IdealKind::two_sided, la)) p.left_duo = false;
    if (!check_crisp(G, IdealKind::two_sided, ra)) p.right_duo = false;
  }
  p.duo = p.left_duo && p.right_duo;
  return p;
}

}  // namespace gsg
