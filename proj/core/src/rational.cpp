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

#include "fairdiv/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kInlineMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if (a <= std::numeric_limits<std::uint64_t>::max() &&
        b <= std::numeric_limits<std::uint64_t>::max()) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_inline(i128 v) { return v >= -static_cast<i128>(kInlineMax) && v <= kInlineMax; }

BigInt to_big_int(i128 v) {
  const bool negative = v < 0;
  const u128 mag = uabs(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out |= static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

bool big_fits_inline(const BigInt& v) { return v >= -BigInt(kInlineMax) && v <= BigInt(kInlineMax); }

[[noreturn]] void throw_division_by_zero() { throw std::domain_error("rational division by zero"); }

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw_division_by_zero();
  *this = from_wide(numerator, denominator);
}

Rational::Rational(const BigInt& value) { assign_big(BigRational(value)); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw_division_by_zero();
  // boost's two-argument constructor rejects negative denominators.
  if (denominator < 0) {
    assign_big(BigRational(BigInt(-numerator), BigInt(-denominator)));
  } else {
    assign_big(BigRational(numerator, denominator));
  }
}

Rational::Rational(const BigRational& value) { assign_big(value); }

Rational Rational::from_wide(i128 numerator, i128 denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const u128 g = gcd128(uabs(numerator), static_cast<u128>(denominator));
  if (g > 1) {
    numerator /= static_cast<i128>(g);
    denominator /= static_cast<i128>(g);
  }
  Rational out;
  if (fits_inline(numerator) && fits_inline(denominator)) {
    out.num_ = static_cast<std::int64_t>(numerator);
    out.den_ = static_cast<std::int64_t>(denominator);
  } else {
    out.big_ = std::make_shared<const BigRational>(to_big_int(numerator), to_big_int(denominator));
  }
  return out;
}

void Rational::assign_big(BigRational value) {
  const BigInt& n = boost::multiprecision::numerator(value);
  const BigInt& d = boost::multiprecision::denominator(value);
  if (big_fits_inline(n) && big_fits_inline(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const BigRational>(std::move(value));
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(ErrorKind::invalid_rational, std::string(text), "expected p or p/q");
  }
  if (den_text.find_first_not_of('0') == std::string_view::npos) {
    throw Error(ErrorKind::invalid_rational, std::string(text), "zero denominator");
  }
  auto parse_int = [](std::string_view s) -> BigInt { return BigInt(std::string(s)); };
  if (num_text.size() <= 18 && den_text.size() <= 18) {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::from_chars(num_text.data(), num_text.data() + num_text.size(), n);
    std::from_chars(den_text.data(), den_text.data() + den_text.size(), d);
    return Rational(negative ? -n : n, d);
  }
  BigInt n = parse_int(num_text);
  if (negative) n = -n;
  return Rational(n, parse_int(den_text));
}

BigInt Rational::numerator() const {
  return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
}

BigInt Rational::denominator() const {
  return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
}

BigRational Rational::to_big() const { return big_ ? *big_ : BigRational(num_, den_); }

bool Rational::is_integer() const {
  return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

int Rational::sign() const noexcept {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::to_string() const {
  if (big_) {
    const BigInt& d = boost::multiprecision::denominator(*big_);
    std::string out = boost::multiprecision::numerator(*big_).str();
    if (d != 1) out += "/" + d.str();
    return out;
  }
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

std::string Rational::to_decimal(int significant_digits) const {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const Decimal value = Decimal(numerator()) / Decimal(denominator());
  return value.str(significant_digits);
}

double Rational::to_double() const {
  if (!big_) return static_cast<double>(num_) / static_cast<double>(den_);
  return big_->convert_to<double>();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == rhs.den_) {
      *this = from_wide(static_cast<i128>(num_) + rhs.num_, den_);
      return *this;
    }
    const std::int64_t g = std::gcd(den_, rhs.den_);
    const i128 t = static_cast<i128>(num_) * (rhs.den_ / g) + static_cast<i128>(rhs.num_) * (den_ / g);
    *this = from_wide(t, static_cast<i128>(den_ / g) * rhs.den_);
    return *this;
  }
  assign_big(to_big() + rhs.to_big());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      *this = Rational();
      return *this;
    }
    const std::int64_t g1 = std::gcd(num_, rhs.den_);
    const std::int64_t g2 = std::gcd(rhs.num_, den_);
    const i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    const i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    *this = from_wide(n, d);
    return *this;
  }
  assign_big(to_big() * rhs.to_big());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw_division_by_zero();
  if (!big_ && !rhs.big_) {
    const std::int64_t g1 = std::gcd(num_, rhs.num_);
    const std::int64_t g2 = std::gcd(den_, rhs.den_);
    const i128 n = static_cast<i128>(num_ / g1) * (rhs.den_ / g2);
    const i128 d = static_cast<i128>(den_ / g2) * (rhs.num_ / g1);
    *this = from_wide(n, d);
    return *this;
  }
  assign_big(to_big() / rhs.to_big());
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  if (big_) {
    out.assign_big(-*big_);
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;  // canonical representation: inline and big never coincide
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    const i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    const i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    return a < b ? std::strong_ordering::less
                 : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const BigRational a = lhs.to_big();
  const BigRational b = rhs.to_big();
  return a < b ? std::strong_ordering::less
               : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace fairdiv
