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

#include "gsg/morphisms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gsg {

namespace {

bool is_surjective(const std::vector<int>& map, int target_size) {
  std::vector<bool> hit(static_cast<std::size_t>(target_size), false);
  for (int v : map) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

HomValidation validate_hom(const GammaSemigroup& source,
                           const GammaSemigroup& target,
                           const std::vector<int>& map) {
  HomValidation v;
  if (source.gamma_size() != target.gamma_size())
    v.errors.push_back("parameter sets differ: source has " +
                       std::to_string(source.gamma_size()) + ", target has " +
                       std::to_string(target.gamma_size()));
  if (static_cast<int>(map.size()) != source.size())
    v.errors.push_back("map has " + std::to_string(map.size()) +
                       " entries for a carrier of " +
                       std::to_string(source.size()));
  if (v.errors.empty())
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] < 0 || map[i] >= target.size()) {
        v.errors.push_back("image of " + std::to_string(i) +
                           " out of range: " + std::to_string(map[i]));
      }
  if (!v.errors.empty()) return v;

  for (int x = 0; x < source.size(); ++x)
    for (int g = 0; g < source.gamma_size(); ++g)
      for (int y = 0; y < source.size(); ++y) {
        const int lhs = map[static_cast<std::size_t>(source.product(x, g, y))];
        const int rhs = target.product(map[static_cast<std::size_t>(x)], g,
                                       map[static_cast<std::size_t>(y)]);
        if (lhs != rhs) v.violations.push_back({x, g, y, lhs, rhs});
      }
  if (!v.violations.empty()) return v;

  v.hom = Homomorphism{source, target, map, is_surjective(map, target.size())};
  return v;
}

std::vector<Homomorphism> enumerate_endomorphisms(const GammaSemigroup& G) {
  const int n = G.size();
  if (n > kMaxEndoCarrier)
    throw std::invalid_argument("enumerate_endomorphisms: carrier too large");
  std::vector<Homomorphism> out;
  std::vector<int> map(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool hom = true;
    for (int x = 0; x < n && hom; ++x)
      for (int g = 0; g < G.gamma_size() && hom; ++g)
        for (int y = 0; y < n && hom; ++y)
          if (map[static_cast<std::size_t>(G.product(x, g, y))] !=
              G.product(map[static_cast<std::size_t>(x)], g,
                        map[static_cast<std::size_t>(y)]))
            hom = false;
    if (hom)
      out.push_back(Homomorphism{G, G, map, is_surjective(map, n)});
    int i = n - 1;
    while (i >= 0 && map[static_cast<std::size_t>(i)] == n - 1) {
      map[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++map[static_cast<std::size_t>(i)];
  }
  return out;
}

FuzzySubset pullback(const Homomorphism& f, const FuzzySubset& lambda) {
  if (lambda.size() != f.target.size())
    throw std::invalid_argument("pullback: subset not on the target carrier");
  FuzzySubset out(f.source.size());
  for (int x = 0; x < f.source.size(); ++x)
    out.set(x, lambda[f.map[static_cast<std::size_t>(x)]]);
  return out;
}

FuzzySubset pushforward(const Homomorphism& f, const FuzzySubset& mu) {
  if (mu.size() != f.source.size())
    throw std::invalid_argument("pushforward: subset not on the source carrier");
  if (!f.surjective)
    throw std::invalid_argument("pushforward: requires a surjective map");
  FuzzySubset out(f.target.size());
  for (int x = 0; x < f.source.size(); ++x) {
    const int y = f.map[static_cast<std::size_t>(x)];
    if (out[y] < mu[x]) out.set(y, mu[x]);
  }
  return out;
}

FuzzySubset endo_transport(const Homomorphism& theta, const FuzzySubset& mu) {
  if (theta.source != theta.target)
    throw std::invalid_argument("endo_transport: not an endomorphism");
  return pullback(theta, mu);
}

}  // namespace gsg
