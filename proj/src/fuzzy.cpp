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

#include "gsg/fuzzy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gsg {

bool FuzzySubset::empty_support() const noexcept {
  return std::all_of(grades_.begin(), grades_.end(),
                     [](const Grade& g) { return g.is_zero(); });
}

ElementSubset FuzzySubset::support() const {
  ElementSubset s(size());
  for (int i = 0; i < size(); ++i)
    if (!grades_[static_cast<std::size_t>(i)].is_zero()) s.insert(i);
  return s;
}

std::string FuzzySubset::str() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += " ";
    out += grades_[static_cast<std::size_t>(i)].str();
  }
  return out + "]";
}

namespace {

void require_same_carrier(const FuzzySubset& a, const FuzzySubset& b,
                          const char* who) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(who) + ": mismatched carriers");
}

void require_non_empty(const FuzzySubset& mu, const char* who) {
  if (mu.empty_support())
    throw std::invalid_argument(std::string(who) + ": empty fuzzy subset");
}

}  // namespace

FuzzySubset combine(LatticeOp op, const FuzzySubset& a, const FuzzySubset& b) {
  require_same_carrier(a, b, "combine");
  FuzzySubset out(a.size());
  for (int i = 0; i < a.size(); ++i)
    out.set(i, op == LatticeOp::meet ? grade_min(a[i], b[i])
                                     : grade_max(a[i], b[i]));
  return out;
}

FuzzySubset fuzzy_meet(const FuzzySubset& a, const FuzzySubset& b) {
  return combine(LatticeOp::meet, a, b);
}

FuzzySubset fuzzy_join(const FuzzySubset& a, const FuzzySubset& b) {
  return combine(LatticeOp::join, a, b);
}

FuzzySubset compose(const GammaSemigroup& G, const FuzzySubset& mu,
                    const FuzzySubset& sigma) {
  require_same_carrier(mu, sigma, "compose");
  if (mu.size() != G.size())
    throw std::invalid_argument("compose: mismatched carrier");
  FuzzySubset out(G.size());
  for (int y = 0; y < G.size(); ++y) {
    if (mu[y].is_zero()) continue;
    for (int g = 0; g < G.gamma_size(); ++g)
      for (int z = 0; z < G.size(); ++z) {
        const Grade cand = grade_min(mu[y], sigma[z]);
        const int x = G.product(y, g, z);
        if (out[x] < cand) out.set(x, cand);
      }
  }
  return out;
}

FuzzySubset characteristic(const ElementSubset& A) {
  FuzzySubset mu(A.universe_size());
  for (int i = 0; i < A.universe_size(); ++i)
    if (A.contains(i)) mu.set(i, Grade::one());
  return mu;
}

namespace {

std::optional<std::string> subsemigroup_violation(const GammaSemigroup& G,
                                                  const FuzzySubset& mu) {
  for (int x = 0; x < G.size(); ++x)
    for (int g = 0; g < G.gamma_size(); ++g)
      for (int y = 0; y < G.size(); ++y) {
        const Grade need = grade_min(mu[x], mu[y]);
        if (mu[G.product(x, g, y)] < need) {
          std::ostringstream o;
          o << "mu(" << x << " " << g << " " << y << ") = "
            << mu[G.product(x, g, y)].str() << " < min(mu(" << x << "), mu("
            << y << ")) = " << need.str();
          return o.str();
        }
      }
  return std::nullopt;
}

std::optional<std::string> one_sided_violation(const GammaSemigroup& G,
                                               const FuzzySubset& mu,
                                               bool left) {
  for (int x = 0; x < G.size(); ++x)
    for (int g = 0; g < G.gamma_size(); ++g)
      for (int y = 0; y < G.size(); ++y) {
        const Grade& need = left ? mu[y] : mu[x];
        if (mu[G.product(x, g, y)] < need) {
          std::ostringstream o;
          o << "mu(" << x << " " << g << " " << y << ") = "
            << mu[G.product(x, g, y)].str() << " < mu(" << (left ? y : x)
            << ") = " << need.str();
          return o.str();
        }
      }
  return std::nullopt;
}

std::optional<std::string> bi_violation(const GammaSemigroup& G,
                                        const FuzzySubset& mu) {
  for (int x = 0; x < G.size(); ++x)
    for (int b = 0; b < G.gamma_size(); ++b)
      for (int s = 0; s < G.size(); ++s)
        for (int g = 0; g < G.gamma_size(); ++g)
          for (int y = 0; y < G.size(); ++y) {
            const int v = G.product(G.product(x, b, s), g, y);
            const Grade need = grade_min(mu[x], mu[y]);
            if (mu[v] < need) {
              std::ostringstream o;
              o << "mu(" << x << " " << b << " " << s << " " << g << " " << y
                << ") = " << mu[v].str() << " < min(mu(" << x << "), mu(" << y
                << ")) = " << need.str();
              return o.str();
            }
          }
  return std::nullopt;
}

std::optional<std::string> one_two_violation(const GammaSemigroup& G,
                                             const FuzzySubset& mu) {
  for (int x = 0; x < G.size(); ++x)
    for (int a = 0; a < G.gamma_size(); ++a)
      for (int w = 0; w < G.size(); ++w)
        for (int b = 0; b < G.gamma_size(); ++b)
          for (int y = 0; y < G.size(); ++y)
            for (int g = 0; g < G.gamma_size(); ++g)
              for (int z = 0; z < G.size(); ++z) {
                const int v =
                    G.product(G.product(x, a, w), b, G.product(y, g, z));
                const Grade need =
                    grade_min(mu[x], grade_min(mu[y], mu[z]));
                if (mu[v] < need) {
                  std::ostringstream o;
                  o << "mu(" << x << " " << a << " " << w << " " << b << " ("
                    << y << " " << g << " " << z << ")) = " << mu[v].str()
                    << " < min of mu over {" << x << "," << y << "," << z
                    << "} = " << need.str();
                  return o.str();
                }
              }
  return std::nullopt;
}

std::optional<std::string> quasi_violation(const GammaSemigroup& G,
                                           const FuzzySubset& mu) {
  const FuzzySubset chi = characteristic(ElementSubset::full(G.size()));
  const FuzzySubset lhs = fuzzy_meet(compose(G, mu, chi), compose(G, chi, mu));
  for (int x = 0; x < G.size(); ++x)
    if (mu[x] < lhs[x]) {
      std::ostringstream o;
      o << "((mu o chi) meet (chi o mu))(" << x << ") = " << lhs[x].str()
        << " > mu(" << x << ") = " << mu[x].str();
      return o.str();
    }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> fuzzy_violation(const GammaSemigroup& G,
                                           IdealKind kind,
                                           const FuzzySubset& mu) {
  if (mu.size() != G.size())
    throw std::invalid_argument("check_fuzzy: mismatched carrier");
  require_non_empty(mu, "check_fuzzy");
  switch (kind) {
    case IdealKind::subsemigroup:
      return subsemigroup_violation(G, mu);
    case IdealKind::left:
      return one_sided_violation(G, mu, true);
    case IdealKind::right:
      return one_sided_violation(G, mu, false);
    case IdealKind::two_sided: {
      if (auto v = one_sided_violation(G, mu, true)) return v;
      return one_sided_violation(G, mu, false);
    }
    case IdealKind::bi: {
      if (auto v = subsemigroup_violation(G, mu)) return v;
      return bi_violation(G, mu);
    }
    case IdealKind::one_two: {
      if (auto v = subsemigroup_violation(G, mu)) return v;
      return one_two_violation(G, mu);
    }
    case IdealKind::quasi:
      return quasi_violation(G, mu);
  }
  return std::nullopt;
}

bool check_fuzzy(const GammaSemigroup& G, IdealKind kind,
                 const FuzzySubset& mu) {
  return !fuzzy_violation(G, kind, mu).has_value();
}

bool check_fuzzy_quasi_pointwise(const GammaSemigroup& G,
                                 const FuzzySubset& mu,
                                 QuasiPointwiseVariant variant) {
  if (mu.size() != G.size())
    throw std::invalid_argument("check_fuzzy_quasi_pointwise: mismatched carrier");
  require_non_empty(mu, "check_fuzzy_quasi_pointwise");
  const int n = G.size();
  const int m = G.gamma_size();
  // Collect every factorization x = u g v, then range over ordered pairs of
  // factorizations of the same element: the first contributes (b, s), the
  // second (t, c).
  std::vector<std::vector<std::pair<int, int>>> factorizations(
      static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int g = 0; g < m; ++g)
      for (int v = 0; v < n; ++v)
        factorizations[static_cast<std::size_t>(G.product(u, g, v))]
            .emplace_back(u, v);
  for (int x = 0; x < n; ++x) {
    const auto& fs = factorizations[static_cast<std::size_t>(x)];
    for (const auto& [b, s] : fs)
      for (const auto& [t, c] : fs) {
        const Grade bc = grade_min(mu[b], mu[c]);
        const Grade need = variant == QuasiPointwiseVariant::min_form
                               ? bc
                               : grade_max(bc, grade_min(mu[t], mu[s]));
        if (mu[x] < need) return false;
      }
  }
  return true;
}

ElementSubset level_set(const FuzzySubset& mu, const Grade& t) {
  ElementSubset cut(mu.size());
  for (int i = 0; i < mu.size(); ++i)
    if (!(mu[i] < t)) cut.insert(i);
  return cut;
}

std::vector<Grade> image_values(const FuzzySubset& mu) {
  std::vector<Grade> vals = mu.grades();
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

FuzzySubset power(const FuzzySubset& mu, unsigned k) {
  FuzzySubset out(mu.size());
  for (int i = 0; i < mu.size(); ++i) out.set(i, mu[i].pow(k));
  return out;
}

bool leq(const FuzzySubset& a, const FuzzySubset& b) {
  require_same_carrier(a, b, "leq");
  for (int i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

GradeGrid::GradeGrid(std::vector<Grade> levels) : levels_(std::move(levels)) {
  if (levels_.size() < 2)
    throw std::invalid_argument("grid: needs at least two levels");
  for (std::size_t i = 1; i < levels_.size(); ++i)
    if (!(levels_[i - 1] < levels_[i]))
      throw std::invalid_argument("grid: levels must be strictly ascending");
  if (!levels_.front().is_zero() || !levels_.back().is_one())
    throw std::invalid_argument("grid: must contain 0 and 1");
}

GradeGrid GradeGrid::uniform(int levels) {
  if (levels < 2) throw std::invalid_argument("grid: needs at least two levels");
  std::vector<Grade> v;
  v.reserve(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) v.emplace_back(k, levels - 1);
  return GradeGrid(std::move(v));
}

}  // namespace gsg
