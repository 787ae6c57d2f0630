#include <gtest/gtest.h>

#include "g2/serialize.hpp"
#include "support.hpp"

using g2::json;
using g2::NumberField;
using g2::Rational;
using P = g2::RationalPolynomial;

TEST(Serialize, RationalAsString) {
  EXPECT_EQ(g2::encode(Rational(-3, 4)), json("-3/4"));
  EXPECT_EQ(g2::encode(Rational(5)), json("5"));
  EXPECT_EQ(g2::decode<Rational>(json("10/4")), Rational(5, 2));
  EXPECT_EQ(g2::decode<Rational>(json(7)), Rational(7));
  EXPECT_THROW(g2::decode<Rational>(json(1.5)), g2::ParseError);
}

TEST(Serialize, NumberFieldRecord) {
  auto m = NumberField::make_modulus(P{-3, 0, 1});
  NumberField x = NumberField(8) + NumberField(4) * NumberField::generator(m);
  json j = g2::encode(x);
  EXPECT_EQ(j["min_poly"], json({"-3", "0", "1"}));
  EXPECT_EQ(j["coeffs"], json({"8", "4"}));
  EXPECT_EQ(g2::decode<NumberField>(j), x);
  EXPECT_EQ(g2::encode(NumberField(Rational(1, 3))), json("1/3"));
  EXPECT_THROW(g2::decode<NumberField>(json{{"min_poly", {"1", "2"}}, {"coeffs", {"1"}}}), g2::ParseError);
  EXPECT_THROW(g2::decode<NumberField>(json{{"coeffs", {"1"}}}), g2::ParseError);
}

TEST(Serialize, RandomRoundTrips) {
  std::mt19937 rng(71);
  auto m = NumberField::make_modulus(P{-5, 1, 0, 1});
  for (int k = 0; k < 200; ++k) {
    Rational r = testing_support::random_rational(rng, 1000000, 999);
    EXPECT_EQ(g2::decode<Rational>(json::parse(g2::encode(r).dump())), r);
    auto e = NumberField::from_representative(m, testing_support::random_poly(rng, 2));
    EXPECT_EQ(g2::decode<NumberField>(json::parse(g2::encode(e).dump())), e);
    auto p = testing_support::random_poly(rng, k % 7);
    EXPECT_EQ(g2::decode<P>(g2::encode(p)), p);
  }
}

TEST(Serialize, TowerRoundTrip) {
  using T = g2::NumberFieldElement<NumberField>;
  auto m = NumberField::make_modulus(P{6, 0, 1});
  NumberField s = NumberField::generator(m);
  auto mm = T::make_modulus(g2::Polynomial<NumberField>{s, NumberField(1), NumberField(1)});
  T y = T::generator(mm) * T(s + NumberField(1));
  json j = g2::encode(y);
  EXPECT_TRUE(j["min_poly"][0].is_object());
  EXPECT_EQ(g2::decode<T>(j), y);
}

TEST(Serialize, ProjectivePointsAndPolynomialText) {
  using Pt = g2::ProjectivePoint<Rational>;
  EXPECT_EQ(g2::encode(Pt::infinity()), json("inf"));
  EXPECT_TRUE(g2::decode<Pt>(json("inf")).is_infinity());
  EXPECT_EQ(*g2::decode<Pt>(json("2/3")).value, Rational(2, 3));
  EXPECT_EQ(g2::decode_polynomial(json("x^5 - x")), (P{0, -1, 0, 0, 0, 1}));
  EXPECT_EQ(g2::decode_polynomial(json({"0", "-1", "0", "0", "0", "1"})), (P{0, -1, 0, 0, 0, 1}));
  EXPECT_THROW(g2::decode_polynomial(json(3)), g2::ParseError);
}
