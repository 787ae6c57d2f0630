#include <gtest/gtest.h>

#include "g2/exact.hpp"
#include "g2/families/common.hpp"
#include "support.hpp"

using g2::NumberField;
using g2::Rational;
using P = g2::RationalPolynomial;

namespace {

NumberField random_element(std::mt19937& rng, const NumberField::Modulus& m) {
  std::vector<Rational> c;
  for (int i = 0; i < m->degree(); ++i) c.push_back(testing_support::random_rational(rng, 9, 5));
  return NumberField::from_representative(m, P(c));
}

}  // namespace

TEST(NumberField, GeneratorSatisfiesModulus) {
  auto m = NumberField::make_modulus(P{1, 0, 1});
  NumberField i = NumberField::generator(m);
  EXPECT_EQ(i * i, NumberField(-1));
  EXPECT_EQ(g2::to_string(i * i + i), "a - 1 (mod a^2 + 1)");
  EXPECT_EQ(i.coefficients(), (std::vector<Rational>{0, 1}));
}

TEST(NumberField, ModulusIsMadeMonic) {
  auto m = NumberField::make_modulus(P{-6, 0, 3});
  EXPECT_EQ(*m, (P{-2, 0, 1}));
  EXPECT_THROW(NumberField::make_modulus(P{3}), g2::InvalidArgument);
}

TEST(NumberField, RingAxiomsOnRandomElements) {
  std::mt19937 rng(21);
  auto m = NumberField::make_modulus(P{-5, 1, 0, 1});  // x^3 + x - 5, irreducible
  for (int k = 0; k < 200; ++k) {
    NumberField a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, m);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, NumberField(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), NumberField(1));
    }
  }
}

TEST(NumberField, ZeroDivisorsAreReported) {
  auto m = NumberField::make_modulus(P{-1, 0, 1});  // (x-1)(x+1), not a field
  NumberField x = NumberField::generator(m);
  NumberField z = x - NumberField(1);
  try {
    (void)z.inverse();
    FAIL() << "expected a zero divisor";
  } catch (const g2::ZeroDivisorError& e) {
    EXPECT_EQ(e.factor(), "a - 1");
  }
  EXPECT_THROW(NumberField(0).inverse(), g2::DivisionByZero);
  EXPECT_EQ((x + NumberField(2)) * (x + NumberField(2)).inverse(), NumberField(1));
}

TEST(NumberField, ScalarsMixAcrossModuli) {
  auto m1 = NumberField::make_modulus(P{-2, 0, 1});
  auto m2 = NumberField::make_modulus(P{-3, 0, 1});
  NumberField a = NumberField::generator(m1), b = NumberField::generator(m2);
  EXPECT_EQ(a * a, b * b - NumberField(1));
  EXPECT_THROW((void)(a + b), g2::ModulusMismatch);
  EXPECT_THROW((void)(a == b), g2::ModulusMismatch);
  EXPECT_TRUE((a * a).in_base());
  EXPECT_EQ((a * a).as_base(), Rational(2));
  EXPECT_FALSE(a.as_base().has_value());
}

TEST(NumberField, EqualModuliAreCompatible) {
  auto m1 = NumberField::make_modulus(P{-2, 0, 1});
  auto m2 = NumberField::make_modulus(P{-2, 0, 1});
  EXPECT_EQ(NumberField::generator(m1) * NumberField::generator(m2), NumberField(2));
}

TEST(NumberField, TowerOfQuadraticExtensions) {
  using E = g2::NumberFieldElement<NumberField>;
  auto m = NumberField::make_modulus(P{-2, 0, 1});
  NumberField s2 = NumberField::generator(m);
  // y^2 = sqrt 2 over Q(sqrt 2)
  auto mm = E::make_modulus(g2::Polynomial<NumberField>{NumberField(0) - s2, NumberField(0), NumberField(1)});
  E y = E::generator(mm);
  E y4 = y * y * y * y;
  EXPECT_EQ(y4, E(NumberField(2)));
  E inv = (y + E(NumberField(1))).inverse();
  EXPECT_EQ(inv * (y + E(NumberField(1))), E(NumberField(1)));
}

TEST(ExactRoots, SplitsByType) {
  P p = testing_support::from_roots({{Rational(1, 2), 2}}) * g2::pow(P{-2, 0, 1}, 2) * P{-2, 0, 0, 1};
  auto roots = g2::exact_roots(p);
  int rational = 0, quadratic = 0, generic = 0;
  for (const auto& r : roots) {
    EXPECT_TRUE(g2::is_zero(p(r.value)));
    if (r.value.in_base()) ++rational;
    else if (r.conjugates == 1) ++quadratic;
    else ++generic;
  }
  EXPECT_EQ(rational, 1);
  EXPECT_EQ(quadratic, 2);
  EXPECT_EQ(generic, 1);
}
