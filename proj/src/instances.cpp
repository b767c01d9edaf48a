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

#include "gsg/instances.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gsg {

namespace {

std::size_t table_entries(int n, int m) {
  return static_cast<std::size_t>(n) * m * n;
}

// n^(n*n*m) capped so comparisons against a budget stay in range.
std::uint64_t candidate_count_capped(int n, int m, std::uint64_t cap) {
  std::uint64_t count = 1;
  const std::size_t entries = table_entries(n, m);
  for (std::size_t i = 0; i < entries; ++i) {
    if (count > cap / static_cast<std::uint64_t>(n)) return cap + 1;
    count *= static_cast<std::uint64_t>(n);
  }
  return count;
}

bool is_associative(int n, int m, const std::vector<int>& t) {
  const auto at = [&](int x, int g, int y) {
    return t[(static_cast<std::size_t>(x) * m + g) * n + y];
  };
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < m; ++b)
      for (int y = 0; y < n; ++y)
        for (int g = 0; g < m; ++g)
          for (int z = 0; z < n; ++z)
            if (at(at(x, b, y), g, z) != at(x, b, at(y, g, z))) return false;
  return true;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GammaSemigroup make_left_zero(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("left_zero: dimensions must be positive");
  std::vector<int> t(table_entries(n, m));
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g)
      for (int y = 0; y < n; ++y)
        t[(static_cast<std::size_t>(x) * m + g) * n + y] = x;
  return GammaSemigroup(n, m, std::move(t));
}

GammaSemigroup make_right_zero(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("right_zero: dimensions must be positive");
  std::vector<int> t(table_entries(n, m));
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g)
      for (int y = 0; y < n; ++y)
        t[(static_cast<std::size_t>(x) * m + g) * n + y] = y;
  return GammaSemigroup(n, m, std::move(t));
}

GammaSemigroup make_modular(int n, const std::vector<int>& gammas) {
  if (n < 2) throw std::invalid_argument("modular: carrier must have size >= 2");
  if (gammas.empty())
    throw std::invalid_argument("modular: needs at least one parameter value");
  for (int g : gammas)
    if (g < 1 || g >= n)
      throw std::invalid_argument("modular: parameter values must lie in 1..n-1");
  const int m = static_cast<int>(gammas.size());
  std::vector<int> t(table_entries(n, m));
  for (int x = 0; x < n; ++x)
    for (int gi = 0; gi < m; ++gi)
      for (int y = 0; y < n; ++y)
        t[(static_cast<std::size_t>(x) * m + gi) * n + y] =
            static_cast<int>((static_cast<long long>(x) * gammas[static_cast<std::size_t>(gi)] * y) % n);
  return GammaSemigroup(n, m, std::move(t));
}

GammaSemigroup make_lift(int n, const std::vector<int>& semigroup_table,
                         int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("lift: dimensions must be positive");
  if (semigroup_table.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("lift: semigroup table must have n*n entries");
  std::vector<int> t(table_entries(n, m));
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g)
      for (int y = 0; y < n; ++y)
        t[(static_cast<std::size_t>(x) * m + g) * n + y] =
            semigroup_table[static_cast<std::size_t>(x) * n + y];
  return GammaSemigroup(n, m, std::move(t));
}

GammaSemigroup make_instance(const InstanceSpec& spec) {
  switch (spec.kind) {
    case InstanceSpec::Kind::left_zero:
      return make_left_zero(spec.n, spec.m);
    case InstanceSpec::Kind::right_zero:
      return make_right_zero(spec.n, spec.m);
    case InstanceSpec::Kind::modular:
      return make_modular(spec.n, spec.gammas);
    case InstanceSpec::Kind::lift:
      return make_lift(spec.n, spec.table, spec.m);
    case InstanceSpec::Kind::explicit_table:
      return GammaSemigroup(spec.n, spec.m, spec.table);
  }
  throw std::invalid_argument("make_instance: unknown kind");
}

InstanceEnumerator::InstanceEnumerator(int n, int m, std::uint64_t budget,
                                       std::optional<std::uint64_t> seed)
    : n_(n),
      m_(m),
      budget_(budget),
      seed_(seed.value_or(0)),
      digits_(table_entries(n, m), 0) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("enumerate: dimensions must be positive");
  exhaustive_ = candidate_count_capped(n, m, budget) <= budget;
}

bool InstanceEnumerator::advance_odometer() {
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (*it < n_ - 1) {
      ++*it;
      return true;
    }
    *it = 0;
  }
  return false;
}

std::optional<GammaSemigroup> InstanceEnumerator::next() {
  if (done_) return std::nullopt;
  if (exhaustive_) {
    for (;;) {
      if (started_ && !advance_odometer()) {
        done_ = true;
        return std::nullopt;
      }
      started_ = true;
      ++tried_;
      if (is_associative(n_, m_, digits_)) {
        ++emitted_;
        return GammaSemigroup(n_, m_, digits_);
      }
    }
  }
  // Sampling: one table per budget unit, each drawn from a stream keyed by
  // (seed, sample index) so the k-th draw never depends on consumption order.
  while (tried_ < budget_) {
    std::uint64_t key = seed_ + 0x632be59bd9b4e019ULL * (tried_ + 1);
    std::mt19937_64 rng(splitmix64(key));
    std::uniform_int_distribution<int> dist(0, n_ - 1);
    for (auto& d : digits_) d = dist(rng);
    ++tried_;
    if (is_associative(n_, m_, digits_)) {
      ++emitted_;
      return GammaSemigroup(n_, m_, digits_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<GammaSemigroup> enumerate_all(int n, int m, std::uint64_t budget) {
  InstanceEnumerator e(n, m, budget);
  if (!e.exhaustive())
    throw std::invalid_argument(
        "enumerate_all: candidate count exceeds the budget; use the "
        "enumerator's sampling mode");
  std::vector<GammaSemigroup> out;
  while (auto g = e.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<int> canonicalize(const GammaSemigroup& G) {
  const int n = G.size();
  const int m = G.gamma_size();
  if (n > kMaxCanonCarrier || m > kMaxCanonGamma)
    throw std::invalid_argument("canonicalize: dimensions beyond guard");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> sigma_inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma_inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
    std::vector<int> tau(static_cast<std::size_t>(m));
    std::iota(tau.begin(), tau.end(), 0);
    do {
      std::vector<int> tau_inv(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) tau_inv[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)])] = i;
      std::vector<int> relabeled(table_entries(n, m));
      for (int x = 0; x < n; ++x)
        for (int g = 0; g < m; ++g)
          for (int y = 0; y < n; ++y)
            relabeled[(static_cast<std::size_t>(x) * m + g) * n + y] =
                sigma[static_cast<std::size_t>(G.product(
                    sigma_inv[static_cast<std::size_t>(x)],
                    tau_inv[static_cast<std::size_t>(g)],
                    sigma_inv[static_cast<std::size_t>(y)]))];
      if (best.empty() || relabeled < best) best = std::move(relabeled);
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

}  // namespace gsg
