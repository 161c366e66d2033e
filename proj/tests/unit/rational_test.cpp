#include <gtest/gtest.h>

#include <stdexcept>

#include "sortcut/rational.hpp"

using sortcut::Rational;

TEST(Rational, LowestTerms) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator_string(), "-3");
  EXPECT_EQ(r.denominator_string(), "4");
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("1108/9"), Rational(1108, 9));
  EXPECT_EQ(Rational::parse("60"), Rational(60));
  EXPECT_EQ(Rational::parse("-2/4"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").to_string(),
            "41152263004115226300411522630");
}

TEST(Rational, ParseErrors) {
  for (const char* bad : {"", "1/", "/2", "1.5", "a", "1/2/3", "--1", " 1"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
  try {
    Rational::parse("1/0");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("zero denominator"), std::string::npos);
  }
}

TEST(Rational, ExactArithmetic) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  Rational sum;
  for (int i = 0; i < 10; ++i) sum += Rational(1, 10);
  EXPECT_EQ(sum, Rational(1));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(sortcut::min(Rational(2), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(sortcut::max(Rational(2), Rational(1, 2)), Rational(2));
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), Rational(3));
  EXPECT_EQ(Rational(7, 2).ceil(), Rational(4));
  EXPECT_EQ(Rational(-7, 2).floor(), Rational(-4));
  EXPECT_EQ(Rational(-7, 2).ceil(), Rational(-3));
  EXPECT_EQ(Rational(5).floor(), Rational(5));
  EXPECT_EQ(Rational(-7, 2).abs(), Rational(7, 2));
  EXPECT_EQ(Rational(99, 10).floor_to_int64(), 9);
}

TEST(Rational, Decimal) {
  EXPECT_EQ(Rational(1108, 9).to_decimal(), "123.111111");
  EXPECT_EQ(Rational(1108, 9).to_decimal(2), "123.11");
  EXPECT_EQ(Rational(2, 3).to_decimal(2), "0.67");
  EXPECT_EQ(Rational(-2, 3).to_decimal(2), "-0.67");
  EXPECT_EQ(Rational(1, 2).to_decimal(0), "1");
  EXPECT_EQ(Rational(-1, 1000).to_decimal(2), "0.00");
  EXPECT_EQ(Rational(5).to_decimal(3), "5.000");
  EXPECT_NEAR(Rational(1, 3).to_double(), 1.0 / 3.0, 1e-15);
}

TEST(Rational, Predicates) {
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_FALSE(Rational(1, 2).is_integer());
  EXPECT_TRUE(Rational().is_zero());
  EXPECT_EQ(Rational(-3, 4).sign(), -1);
}
