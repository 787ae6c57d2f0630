#include <gtest/gtest.h>

#include "g2/exact/rational.hpp"

using g2::Rational;
using namespace g2::literals;

TEST(Rational, NormalizesOnConstruction) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(8, 4).to_string(), "2");
}

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(Rational::parse("-1213857792/28561"), Rational(-1213857792, 28561));
  EXPECT_EQ(Rational::parse("  42 "), Rational(42));
  EXPECT_EQ(Rational::parse("10/-4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("942344950464/1500625").denominator(), g2::Integer(1500625));
  EXPECT_THROW(Rational::parse("1/0"), g2::ParseError);
  EXPECT_THROW(Rational::parse("abc"), g2::ParseError);
  EXPECT_THROW(Rational::parse(""), g2::ParseError);
}

TEST(Rational, BigValuesStayExact) {
  Rational a = Rational::parse("30007051759890039511083220633387008");
  Rational b = a * a;
  EXPECT_EQ(b / a, a);
  EXPECT_EQ((b - a * a), Rational(0));
}

TEST(Rational, ArithmeticAndOrdering) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_THROW(Rational(1) / Rational(0), g2::DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), g2::DivisionByZero);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_EQ("3/4"_q, Rational(3, 4));
}

TEST(Rational, FloorAndSquareRoot) {
  EXPECT_EQ(g2::floor(Rational(-7, 2)), g2::Integer(-4));
  EXPECT_EQ(g2::floor(Rational(7, 2)), g2::Integer(3));
  Rational r;
  EXPECT_TRUE(g2::rational_sqrt(Rational(49, 16), r));
  EXPECT_EQ(r, Rational(7, 4));
  EXPECT_FALSE(g2::rational_sqrt(Rational(2), r));
  EXPECT_FALSE(g2::rational_sqrt(Rational(-4), r));
}
