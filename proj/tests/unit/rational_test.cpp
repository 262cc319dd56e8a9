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

#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fairdiv/errors.hpp"
#include "fairdiv/rational.hpp"
#include "fairdiv/ratio.hpp"

namespace fairdiv {
namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(6, 8).to_string(), "3/4");
  EXPECT_EQ(Rational(-6, -8).to_string(), "3/4");
  EXPECT_EQ(Rational(6, -8).to_string(), "-3/4");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_TRUE(Rational(0, -3).is_zero());
  EXPECT_EQ(Rational(3, 4).numerator(), 3);
  EXPECT_EQ(Rational(3, 4).denominator(), 4);
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, Arithmetic) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_LT(b, a);
  EXPECT_EQ(min(a, b), b);
  EXPECT_EQ(max(a, b), a);
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_FALSE(Rational(3, 2).is_integer());
  EXPECT_EQ(Rational(-3, 2).sign(), -1);
}

TEST(RationalTest, PromotesOnOverflowAndDemotesBack) {
  Rational big(kMax);
  big += 1;
  EXPECT_FALSE(big.is_inline());
  EXPECT_EQ(big.to_string(), "9223372036854775808");
  big -= 1;
  EXPECT_TRUE(big.is_inline());
  EXPECT_EQ(big, Rational(kMax));

  const Rational tiny(1, kMax);
  const Rational product = tiny * tiny;
  EXPECT_FALSE(product.is_inline());
  EXPECT_EQ(product * Rational(kMax) * Rational(kMax), Rational(1));
}

TEST(RationalTest, BigConstructorNormalizesSign) {
  EXPECT_EQ(Rational(BigInt(3), BigInt(-6)), Rational(-1, 2));
  EXPECT_EQ(Rational(BigInt(-3), BigInt(-6)), Rational(1, 2));
  EXPECT_EQ(Rational(BigInt(0), BigInt(-6)), Rational(0));
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational::parse("12/8"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  for (const char* bad : {"", "1/", "/2", "a", "1.5", "1/0", "--1", "1/-2", " 1"}) {
    EXPECT_THROW(static_cast<void>(Rational::parse(bad)), Error) << bad;
  }
}

TEST(RationalTest, Decimal) {
  EXPECT_EQ(Rational(3, 4).to_decimal(), "0.75");
  EXPECT_EQ(Rational(8, 13).to_decimal(6), "0.615385");
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
  std::ostringstream os;
  os << Rational(5, 3);
  EXPECT_EQ(os.str(), "5/3");
}

// Random expression chains checked against boost's rational type, with
// operands chosen to cross the inline/big boundary often.
TEST(RationalTest, AgreesWithBigRationalOnRandomChains) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> small(-50, 50);
  std::uniform_int_distribution<std::int64_t> wide(-kMax, kMax);
  std::uniform_int_distribution<int> op(0, 3);
  for (int chain = 0; chain < 300; ++chain) {
    Rational x(1);
    BigRational y(1);
    for (int step = 0; step < 20; ++step) {
      const std::int64_t p = step % 3 == 0 ? wide(rng) : small(rng);
      std::int64_t d = step % 4 == 0 ? wide(rng) : small(rng);
      if (d == 0) d = 1;
      const Rational r(p, d);
      const BigRational s = BigRational(BigInt(p)) / BigRational(BigInt(d));
      switch (op(rng)) {
        case 0: x += r; y += s; break;
        case 1: x -= r; y -= s; break;
        case 2: x *= r; y *= s; break;
        default:
          if (p == 0) break;
          x /= r;
          y /= s;
      }
      ASSERT_EQ(x.to_big(), y);
      ASSERT_EQ(x.is_inline(), boost::multiprecision::abs(boost::multiprecision::numerator(y)) <= kMax &&
                                   boost::multiprecision::denominator(y) <= kMax);
      ASSERT_EQ(x, Rational(y));
    }
  }
}

TEST(RatioTest, UnboundedOrdering) {
  const Ratio u = Ratio::unbounded();
  const Ratio half = Ratio::finite(Rational(1, 2));
  EXPECT_TRUE(Ratio().is_unbounded());
  EXPECT_LT(half, u);
  EXPECT_EQ(min(u, half), half);
  EXPECT_TRUE(u.satisfies(Rational(1000)));
  EXPECT_TRUE(half.satisfies(Rational(1, 2)));
  EXPECT_FALSE(half.satisfies(Rational(2, 3)));
  EXPECT_EQ(Ratio::quotient(Rational(3), Rational(0)), u);
  EXPECT_EQ(Ratio::quotient(Rational(0), Rational(0)), u);
  EXPECT_EQ(Ratio::quotient(Rational(0), Rational(2)), Rational(0));
  EXPECT_EQ(u.to_string(), "unbounded");
  EXPECT_THROW(static_cast<void>(u.value()), std::logic_error);
}

}  // namespace
}  // namespace fairdiv
