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

#ifndef GAMMASG_INSTANCES_HPP_
#define GAMMASG_INSTANCES_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "gsg/gamma_semigroup.hpp"

namespace gsg {

//! Recipe for a concrete structure.
struct InstanceSpec {
  enum class Kind { left_zero, right_zero, modular, lift, explicit_table };

  Kind kind = Kind::explicit_table;
  int n = 0;
  int m = 1;
  std::vector<int> gammas;  // modular: parameter values, each in 1..n-1
  std::vector<int> table;   // lift: n*n semigroup table; explicit: n*m*n
};

GammaSemigroup make_instance(const InstanceSpec& spec);

//! x g y = x for every parameter.
GammaSemigroup make_left_zero(int n, int m);
//! x g y = y for every parameter.
GammaSemigroup make_right_zero(int n, int m);
//! Carrier Z_n with x g y = (x * g * y) mod n; each g in 1..n-1.
GammaSemigroup make_modular(int n, const std::vector<int>& gammas);
//! Replicates an ordinary semigroup product into every parameter slice.
GammaSemigroup make_lift(int n, const std::vector<int>& semigroup_table,
                         int m = 1);

//! Streams every valid structure of the given dimensions.
//!
//! When the candidate-table count fits the budget the stream is exhaustive and
//! emits each associative table exactly once, in ascending lexicographic table
//! order. Otherwise it draws `budget` uniform seeded samples and emits the
//! associative ones; yield statistics are exposed for reporting.
class InstanceEnumerator {
 public:
  InstanceEnumerator(int n, int m, std::uint64_t budget,
                     std::optional<std::uint64_t> seed = std::nullopt);

  std::optional<GammaSemigroup> next();

  bool exhaustive() const noexcept { return exhaustive_; }
  std::uint64_t candidates_tried() const noexcept { return tried_; }
  std::uint64_t emitted() const noexcept { return emitted_; }
  double yield_rate() const noexcept {
    return tried_ == 0 ? 0.0
                       : static_cast<double>(emitted_) /
                             static_cast<double>(tried_);
  }

 private:
  bool advance_odometer();

  int n_;
  int m_;
  std::uint64_t budget_;
  std::uint64_t seed_;
  bool exhaustive_;
  bool done_ = false;
  bool started_ = false;
  std::vector<int> digits_;  // current candidate table
  std::uint64_t tried_ = 0;
  std::uint64_t emitted_ = 0;
};

//! Collects the full exhaustive stream; throws if the candidate count
//! exceeds the budget (use the enumerator directly for sampling).
std::vector<GammaSemigroup> enumerate_all(int n, int m,
                                          std::uint64_t budget = 1u << 20);

inline constexpr int kMaxCanonCarrier = 6;
inline constexpr int kMaxCanonGamma = 3;

//! Lexicographically minimal table over all relabelings of the carrier and of
//! the parameter set; equal canonical tables mean isomorphic structures.
//! Throws beyond kMaxCanonCarrier / kMaxCanonGamma.
std::vector<int> canonicalize(const GammaSemigroup& G);

//! splitmix64 step; used to derive per-sample seeds so sampling streams are
//! reproducible and splittable.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace gsg

#endif  // GAMMASG_INSTANCES_HPP_
