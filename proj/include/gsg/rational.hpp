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

#ifndef GAMMASG_RATIONAL_HPP_
#define GAMMASG_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsg {

//! Exact membership grade: a rational number in [0, 1].
//!
//! Stored reduced with a positive denominator, so equality is structural.
//! All arithmetic is exact; anything that would leave [0, 1] or overflow
//! 64-bit components throws instead of rounding.
class Grade {
 public:
  constexpr Grade() noexcept : num_(0), den_(1) {}

  Grade(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("grade: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num < 0 || num > den)
      throw std::domain_error("grade: value outside [0, 1]");
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static constexpr Grade zero() noexcept { return Grade(); }
  static Grade one() { return Grade(1, 1); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == den_; }

  friend bool operator==(const Grade& a, const Grade& b) noexcept = default;

  friend std::strong_ordering operator<=>(const Grade& a,
                                          const Grade& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  //! Exact integer power; pow(0) is 1 by convention.
  Grade pow(unsigned k) const {
    Grade acc = one();
    for (unsigned i = 0; i < k; ++i) acc = mul_checked(acc, *this);
    return acc;
  }

  //! Accepts "p/q" or a bare integer (which must equal 0 or 1 as a value).
  static Grade parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Grade(parse_int(text), 1);
    }
    const std::int64_t p = parse_int(text.substr(0, slash));
    const std::int64_t q = parse_int(text.substr(slash + 1));
    return Grade(p, q);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Grade mul_checked(const Grade& a, const Grade& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.num_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
    const __int128 g = gcd128(n, d);
    if (n / g > kMax || d / g > kMax)
      throw std::overflow_error("grade: power overflows 64-bit components");
    Grade r;
    r.num_ = static_cast<std::int64_t>(n / g);
    r.den_ = static_cast<std::int64_t>(d / g);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("grade: empty numeral");
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("grade: bad numeral '" + std::string(s) +
                                    "'");
      if (v > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10)
        throw std::overflow_error("grade: numeral too large");
      v = v * 10 + (c - '0');
    }
    return v;
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Grade grade_min(const Grade& a, const Grade& b) {
  return a < b ? a : b;
}

inline Grade grade_max(const Grade& a, const Grade& b) {
  return a < b ? b : a;
}

}  // namespace gsg

#endif  // GAMMASG_RATIONAL_HPP_
