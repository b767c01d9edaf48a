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

#ifndef GAMMASG_FUZZY_HPP_
#define GAMMASG_FUZZY_HPP_

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gsg/gamma_semigroup.hpp"
#include "gsg/rational.hpp"

namespace gsg {

//! Fuzzy subset of a carrier: one exact grade per element index.
class FuzzySubset {
 public:
  explicit FuzzySubset(int n) : grades_(static_cast<std::size_t>(n)) {}
  explicit FuzzySubset(std::vector<Grade> grades)
      : grades_(std::move(grades)) {}
  FuzzySubset(std::initializer_list<Grade> grades) : grades_(grades) {}

  static FuzzySubset constant(int n, const Grade& g) {
    FuzzySubset mu(n);
    for (auto& v : mu.grades_) v = g;
    return mu;
  }

  int size() const noexcept { return static_cast<int>(grades_.size()); }
  const Grade& operator[](int i) const {
    return grades_[static_cast<std::size_t>(i)];
  }
  void set(int i, const Grade& g) { grades_[static_cast<std::size_t>(i)] = g; }

  //! True when every grade is zero (the empty fuzzy subset).
  bool empty_support() const noexcept;
  ElementSubset support() const;

  const std::vector<Grade>& grades() const noexcept { return grades_; }
  std::string str() const;  // "[1 1/2 0]"

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;

 private:
  std::vector<Grade> grades_;
};

enum class LatticeOp { meet, join };

//! Pointwise min (meet) or max (join); operands must share a carrier size.
FuzzySubset combine(LatticeOp op, const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset fuzzy_meet(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset fuzzy_join(const FuzzySubset& a, const FuzzySubset& b);

//! Sup-min composition: (mu o sigma)(x) is the max of min(mu(y), sigma(z))
//! over factorizations x = y g z, and 0 when x has none.
FuzzySubset compose(const GammaSemigroup& G, const FuzzySubset& mu,
                    const FuzzySubset& sigma);

//! Characteristic function: grade 1 on A, 0 elsewhere. Empty A is allowed.
FuzzySubset characteristic(const ElementSubset& A);

//! Fuzzy ideal predicate for a non-empty mu (throws on empty support).
//! bi and one_two include the fuzzy subsemigroup requirement; quasi is
//! (mu o chi) meet (chi o mu) <= mu with chi the whole-carrier characteristic.
bool check_fuzzy(const GammaSemigroup& G, IdealKind kind,
                 const FuzzySubset& mu);

//! First failure of the fuzzy predicate, formatted; nullopt when it holds.
std::optional<std::string> fuzzy_violation(const GammaSemigroup& G,
                                           IdealKind kind,
                                           const FuzzySubset& mu);

enum class QuasiPointwiseVariant {
  min_form,    // mu(x) >= min(mu(b), mu(c)) for all pairs x = b a s = t b c
  maxmin_form  // mu(x) >= max(min(mu(b), mu(c)), min(mu(t), mu(s)))
};

//! Factorization-based quasi ideal condition, quantified over every pair of
//! left/right factorizations of each element (throws on empty support).
bool check_fuzzy_quasi_pointwise(const GammaSemigroup& G,
                                 const FuzzySubset& mu,
                                 QuasiPointwiseVariant variant);

//! { x : mu(x) >= t }.
ElementSubset level_set(const FuzzySubset& mu, const Grade& t);

//! Distinct attained grades, ascending.
std::vector<Grade> image_values(const FuzzySubset& mu);

//! Pointwise integer power; k = 0 gives the constant-1 subset.
FuzzySubset power(const FuzzySubset& mu, unsigned k);

bool leq(const FuzzySubset& a, const FuzzySubset& b);

//! Finite ascending grade chain containing 0 and 1; closed under min/max.
class GradeGrid {
 public:
  explicit GradeGrid(std::vector<Grade> levels);

  //! {0, 1/(levels-1), ..., 1}; levels must be at least 2.
  static GradeGrid uniform(int levels);
  //! Standard three-level grid {0, 1/2, 1}.
  static GradeGrid standard() { return uniform(3); }
  //! Complete grid for a carrier of size n: {0, 1/n, ..., 1}.
  static GradeGrid complete_for(int n) { return uniform(n + 1); }

  const std::vector<Grade>& levels() const noexcept { return levels_; }
  int size() const noexcept { return static_cast<int>(levels_.size()); }

 private:
  std::vector<Grade> levels_;
};

}  // namespace gsg

#endif  // GAMMASG_FUZZY_HPP_
