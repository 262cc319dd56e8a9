// Copyright 2026 The fairdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRDIV_RATIONAL_HPP_
#define FAIRDIV_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fairdiv {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are stored inline and
/// operated on with 128-bit intermediates; anything larger is promoted to an
/// arbitrary-precision representation. The representation is canonical: a
/// value is stored inline if and only if it fits, so equality never needs to
/// look across representations.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  // Implicit so that integer literals mix naturally with rationals.
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const BigInt& value);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const BigRational& value);

  /// Parses "p", "-p" or "p/q". Throws Error(kind = invalid_rational).
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const;
  [[nodiscard]] BigInt denominator() const;
  [[nodiscard]] BigRational to_big() const;

  [[nodiscard]] bool is_inline() const noexcept { return !big_; }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const noexcept;

  /// Lowest-terms "p/q", or "p" when the denominator is one.
  [[nodiscard]] std::string to_string() const;
  /// Decimal rendering with the given number of significant digits.
  [[nodiscard]] std::string to_decimal(int significant_digits = 15) const;
  [[nodiscard]] double to_double() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  static Rational from_wide(__int128 numerator, __int128 denominator);
  void assign_big(BigRational value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

[[nodiscard]] Rational min(const Rational& a, const Rational& b);
[[nodiscard]] Rational max(const Rational& a, const Rational& b);

}  // namespace fairdiv

#endif  // FAIRDIV_RATIONAL_HPP_
