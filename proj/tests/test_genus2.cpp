#include <gtest/gtest.h>

#include "g2/genus2.hpp"
#include "oracles/igusa_roots.hpp"
#include "support.hpp"

using g2::Genus2Curve;
using g2::NumberField;
using g2::Rational;
using P = g2::RationalPolynomial;
using Pt = g2::ProjectivePoint<Rational>;

namespace {

/// (c x + d)^6 f((a x + b)/(c x + d)) * e^2 for f of degree <= 6.
P moebius(const P& f, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
          const Rational& e) {
  P out;
  for (int k = 0; k <= 6; ++k)
    out = out + g2::pow(P{b, a}, k) * g2::pow(P{d, c}, 6 - k) * f.coeff(k);
  return out * (e * e);
}

std::array<Pt, 6> split_roots(std::mt19937& rng, bool quintic) {
  std::array<Pt, 6> r;
  std::vector<Rational> used;
  for (int i = 0; i < 6; ++i) {
    if (quintic && i == 5) {
      r[i] = Pt::infinity();
      continue;
    }
    Rational x;
    do x = testing_support::random_rational(rng, 12, 5);
    while (std::find(used.begin(), used.end(), x) != used.end());
    used.push_back(x);
    r[i] = Pt(x);
  }
  return r;
}

P poly_from(const std::array<Pt, 6>& r, const Rational& lead) {
  P f{lead};
  for (const auto& p : r)
    if (!p.is_infinity()) f = f * P{-*p.value, Rational(1)};
  return f;
}

}  // namespace

TEST(Genus2Curve, RequiresDegreeFiveOrSix) {
  EXPECT_THROW(Genus2Curve<Rational>(P{1, 0, 0, 0, 1}), g2::InvalidArgument);
  EXPECT_THROW(Genus2Curve<Rational>(P{1, 0, 0, 0, 0, 0, 0, 1}), g2::InvalidArgument);
  EXPECT_NO_THROW(Genus2Curve<Rational>(P{0, -1, 0, 0, 0, 1}));
}

TEST(Igusa, QuinticWithFourthRootsOfUnity) {
  Genus2Curve<Rational> c(P{0, -1, 0, 0, 0, 1});
  auto J = g2::igusa_invariants(c);
  auto m = NumberField::make_modulus(P{1, 0, 1});
  NumberField i = NumberField::generator(m);
  using E = g2::ProjectivePoint<NumberField>;
  auto oracle_J = oracle::igusa_from_roots<NumberField>(
      NumberField(1), {E(NumberField(0)), E(NumberField(1)), E(NumberField(-1)), E(i), E(NumberField(0) - i),
                       E::infinity()});
  EXPECT_EQ(NumberField(J.J2), oracle_J.J2);
  EXPECT_EQ(NumberField(J.J4), oracle_J.J4);
  EXPECT_EQ(NumberField(J.J6), oracle_J.J6);
  EXPECT_EQ(NumberField(J.J10), oracle_J.J10);
  EXPECT_EQ(J.J2, Rational(-40));
  EXPECT_EQ(J.J10, Rational(-256) * Rational(1));
}

TEST(Igusa, MatchesRootDifferenceOracleOnSplitSextics) {
  std::mt19937 rng(31);
  for (int k = 0; k < 30; ++k) {
    auto r = split_roots(rng, false);
    Rational lead = testing_support::random_nonzero(rng, 5, 3);
    auto J = g2::igusa_invariants(Genus2Curve<Rational>(poly_from(r, lead)));
    auto O = oracle::igusa_from_roots<Rational>(lead, r);
    EXPECT_EQ(J, O);
  }
}

TEST(Igusa, MatchesRootDifferenceOracleOnSplitQuintics) {
  std::mt19937 rng(32);
  for (int k = 0; k < 30; ++k) {
    auto r = split_roots(rng, true);
    Rational lead = testing_support::random_nonzero(rng, 5, 3);
    auto J = g2::igusa_invariants(Genus2Curve<Rational>(poly_from(r, lead)));
    auto O = oracle::igusa_from_roots<Rational>(lead, r);
    EXPECT_EQ(J, O);
  }
}

TEST(Igusa, J10VanishesExactlyWithDiscriminant) {
  std::mt19937 rng(33);
  for (int k = 0; k < 100; ++k) {
    P f = testing_support::random_poly(rng, 4) * P{testing_support::random_rational(rng), 1};
    if (k % 2) f = f * P{testing_support::random_rational(rng), 1};
    if (k % 4 == 1) f = testing_support::random_poly(rng, 4) * g2::pow(P{testing_support::random_rational(rng), 1}, 2);
    Genus2Curve<Rational> c(f);
    EXPECT_EQ(g2::is_zero(g2::igusa_invariants(c).J10), g2::is_zero(g2::discriminant(f)));
    EXPECT_EQ(c.is_smooth(), !g2::is_zero(g2::discriminant(f)));
  }
}

TEST(Igusa, WeightedScalingLaw) {
  std::mt19937 rng(34);
  for (int k = 0; k < 30; ++k) {
    P f = testing_support::random_poly(rng, 5 + k % 2);
    Rational lambda = testing_support::random_nonzero(rng, 7, 4);
    P g = f.compose(P{0, lambda});
    if (f.degree() == 5) {
      // the root at infinity moves too: compare as sextics
      g = moebius(f, lambda, Rational(0), Rational(0), Rational(1), Rational(1));
    }
    auto Jf = g2::igusa_invariants(Genus2Curve<Rational>(f));
    auto Jg = g2::igusa_invariants(Genus2Curve<Rational>(g));
    EXPECT_EQ(Jg.J2, Jf.J2 * lambda.pow(6));
    EXPECT_EQ(Jg.J4, Jf.J4 * lambda.pow(12));
    EXPECT_EQ(Jg.J6, Jf.J6 * lambda.pow(18));
    EXPECT_EQ(Jg.J10, Jf.J10 * lambda.pow(30));
  }
}

TEST(AbsoluteInvariants, StableUnderCoordinateChange) {
  std::mt19937 rng(35);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    P f = testing_support::random_poly(rng, 5 + k % 2);
    Rational a = testing_support::random_rational(rng, 5, 3), b = testing_support::random_rational(rng, 5, 3),
             c = testing_support::random_rational(rng, 5, 3), d = testing_support::random_rational(rng, 5, 3),
             e = testing_support::random_nonzero(rng, 5, 3);
    if (g2::is_zero(a * d - b * c)) continue;
    P g = moebius(f, a, b, c, d, e);
    if (g.degree() < 5) continue;
    Genus2Curve<Rational> C1(f), C2(g);
    auto J1 = g2::igusa_invariants(C1), J2 = g2::igusa_invariants(C2);
    if (g2::is_zero(J1.J2) || g2::is_zero(J2.J2)) continue;
    EXPECT_EQ(g2::absolute_invariants(J1), g2::absolute_invariants(J2));
    EXPECT_TRUE(g2::is_isomorphic(C1, C2));
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(AbsoluteInvariants, RequireNonzeroJ2) {
  g2::IgusaInvariants<Rational> J{Rational(0), Rational(1), Rational(1), Rational(1)};
  EXPECT_THROW(g2::absolute_invariants(J), g2::CriterionInapplicable);
}

TEST(AbsoluteInvariants, DistinguishNonIsomorphicCurves) {
  Genus2Curve<Rational> a(P{0, -1, 0, 0, 0, 1}), b(P{1, 1, 0, 0, 0, 0, 1});
  EXPECT_FALSE(g2::is_isomorphic(a, b));
}

TEST(Transvectant, BinomialsAndFactorials) {
  EXPECT_EQ(g2::detail::factorial(6), Rational(720));
  EXPECT_EQ(g2::detail::binomial(6, 2), Rational(15));
  // (f, f)_2 of x^2 + y^2 (coefficients of x^i y^(2-i)) is a nonzero constant
  g2::BinaryForm<Rational> f{{Rational(1), Rational(0), Rational(1)}};
  auto t = g2::transvectant(f, f, 2);
  EXPECT_FALSE(g2::is_zero(t.scalar()));
}
