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

#ifndef GAMMASG_MORPHISMS_HPP_
#define GAMMASG_MORPHISMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gsg/fuzzy.hpp"
#include "gsg/gamma_semigroup.hpp"

namespace gsg {

//! Structure map f with f(x g y) == f(x) g f(y); both sides must share the
//! same parameter index set. Built through validate_hom only.
struct Homomorphism {
  GammaSemigroup source;
  GammaSemigroup target;
  std::vector<int> map;  // image of each source element
  bool surjective = false;
};

struct HomViolation {
  int x, gamma, y;
  int image_of_product;
  int product_of_images;
};

struct HomValidation {
  std::vector<std::string> errors;  // arity, range, parameter-set mismatch
  std::vector<HomViolation> violations;
  std::optional<Homomorphism> hom;  // set iff ok()

  bool ok() const { return errors.empty() && violations.empty(); }
};

HomValidation validate_hom(const GammaSemigroup& source,
                           const GammaSemigroup& target,
                           const std::vector<int>& map);

inline constexpr int kMaxEndoCarrier = 8;

//! Every endomorphism of G, in lexicographic map order. Always contains the
//! identity. Throws if the carrier exceeds kMaxEndoCarrier.
std::vector<Homomorphism> enumerate_endomorphisms(const GammaSemigroup& G);

//! (f^-1 lambda)(x) = lambda(f(x)); lambda lives on the target.
FuzzySubset pullback(const Homomorphism& f, const FuzzySubset& lambda);

//! (f mu)(y) = max { mu(x) : f(x) = y }; requires f surjective.
FuzzySubset pushforward(const Homomorphism& f, const FuzzySubset& mu);

//! mu[theta] = mu o theta for an endomorphism theta.
FuzzySubset endo_transport(const Homomorphism& theta, const FuzzySubset& mu);

}  // namespace gsg

#endif  // GAMMASG_MORPHISMS_HPP_
