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

#ifndef GAMMASG_GAMMA_SEMIGROUP_HPP_
#define GAMMASG_GAMMA_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gsg {

// Carrier elements and parameters are dense 0-based indices; a structure of
// size n with parameter set of size m is its flat ternary table, laid out as
// table[(x * m + g) * n + y] = x g y.

struct RangeViolation {
  int x, gamma, y;
  int value;
};

struct AssocViolation {
  int x, beta, y, gamma, z;
  int lhs, rhs;  // (x beta y) gamma z vs x beta (y gamma z)
};

struct TableValidation;

//! A finite Gamma-semigroup: total ternary product satisfying
//! (x b y) g z == x b (y g z) for all elements and parameters.
class GammaSemigroup {
 public:
  //! Validates shape, range and associativity; throws std::invalid_argument
  //! describing the first defect if the table is not a Gamma-semigroup.
  GammaSemigroup(int n, int m, std::vector<int> table);

  int size() const noexcept { return n_; }
  int gamma_size() const noexcept { return m_; }

  int product(int x, int g, int y) const {
    return table_[(static_cast<std::size_t>(x) * m_ + g) * n_ + y];
  }

  int product3(int x, int g1, int y, int g2, int z) const {
    return product(product(x, g1, y), g2, z);
  }

  const std::vector<int>& table() const noexcept { return table_; }

  friend bool operator==(const GammaSemigroup&,
                         const GammaSemigroup&) noexcept = default;

 private:
  struct Unchecked {};
  GammaSemigroup(int n, int m, std::vector<int> table, Unchecked) noexcept
      : n_(n), m_(m), table_(std::move(table)) {}
  friend TableValidation validate_table(int, int, const std::vector<int>&);

  int n_;
  int m_;
  std::vector<int> table_;
};

//! Outcome of checking a raw table: either a structure or every defect found.
struct TableValidation {
  int n = 0;
  int m = 0;
  bool shape_ok = false;
  std::size_t expected_entries = 0;
  std::size_t actual_entries = 0;
  std::vector<RangeViolation> range_violations;
  std::vector<AssocViolation> assoc_violations;  // only if range is clean
  std::optional<GammaSemigroup> structure;       // set iff ok()

  bool ok() const {
    return shape_ok && range_violations.empty() && assoc_violations.empty();
  }
};

TableValidation validate_table(int n, int m, const std::vector<int>& table);

//! Subset of a carrier of fixed size; operations are elementwise on bits.
class ElementSubset {
 public:
  explicit ElementSubset(int universe_size)
      : bits_(static_cast<std::size_t>(universe_size), false) {}

  static ElementSubset full(int universe_size) {
    ElementSubset s(universe_size);
    s.bits_.assign(s.bits_.size(), true);
    return s;
  }

  static ElementSubset of(int universe_size, const std::vector<int>& indices);

  //! Bit i of mask selects element i; requires universe_size <= 63.
  static ElementSubset from_mask(int universe_size, std::uint64_t mask);

  int universe_size() const noexcept { return static_cast<int>(bits_.size()); }
  bool contains(int i) const { return bits_[static_cast<std::size_t>(i)]; }
  void insert(int i) { bits_[static_cast<std::size_t>(i)] = true; }

  int count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::uint64_t mask() const;
  std::vector<int> indices() const;
  std::string str() const;  // "{0,2}"

  bool subset_of(const ElementSubset& other) const;

  friend ElementSubset operator&(const ElementSubset& a,
                                 const ElementSubset& b);
  friend ElementSubset operator|(const ElementSubset& a,
                                 const ElementSubset& b);
  friend bool operator==(const ElementSubset&,
                         const ElementSubset&) noexcept = default;

 private:
  std::vector<bool> bits_;
};

enum class IdealKind {
  subsemigroup,
  left,
  right,
  two_sided,
  bi,
  one_two,
  quasi,
};

inline constexpr int kIdealKindCount = 7;
constexpr int kind_index(IdealKind k) { return static_cast<int>(k); }

std::string_view to_string(IdealKind kind);
std::optional<IdealKind> parse_ideal_kind(std::string_view text);

//! { a g b : a in A, g in Gamma, b in B }. Empty factors give an empty result.
ElementSubset subset_product(const GammaSemigroup& G, const ElementSubset& A,
                             const ElementSubset& B);

//! Decides the crisp ideal predicate for a non-empty subset (throws on empty).
//! bi and one_two include the subsemigroup requirement.
bool check_crisp(const GammaSemigroup& G, IdealKind kind,
                 const ElementSubset& I);

//! First failure of the crisp predicate, formatted; nullopt when it holds.
std::optional<std::string> crisp_violation(const GammaSemigroup& G,
                                           IdealKind kind,
                                           const ElementSubset& I);

//! Least ideal of the given kind containing element a.
//! Supported kinds: left, right, two_sided (fixed-point closure) and quasi
//! ({a} union (a Gamma S intersect S Gamma a), asserted against check_crisp).
ElementSubset generate_ideal(const GammaSemigroup& G, IdealKind kind, int a);

inline constexpr int kMaxEnumerableCarrier = 20;

//! All non-empty subsets passing the predicate, in ascending mask order.
//! Throws if the carrier exceeds kMaxEnumerableCarrier.
std::vector<ElementSubset> enumerate_crisp(const GammaSemigroup& G,
                                           IdealKind kind);

struct StructureProfile {
  bool regular = false;
  bool intra_regular = false;
  bool left_regular = false;
  bool right_regular = false;
  bool left_simple = false;
  bool right_simple = false;
  bool simple = false;
  bool left_zero = false;
  bool right_zero = false;
  bool left_duo = false;
  bool right_duo = false;
  bool duo = false;
  ElementSubset idempotents{0};  // elements e with e g e == e for some g
};

//! Exhaustive structural classification; deterministic and side-effect free.
StructureProfile classify(const GammaSemigroup& G);

}  // namespace gsg

#endif  // GAMMASG_GAMMA_SEMIGROUP_HPP_
