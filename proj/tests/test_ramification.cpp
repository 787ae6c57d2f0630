#include <gtest/gtest.h>

#include <set>

#include "g2/ramification.hpp"

using g2::Rational;
using P = g2::RationalPolynomial;
using Pt = g2::ProjectivePoint<Rational>;

namespace {

std::vector<std::string> names(const g2::Enumeration& e) {
  std::vector<std::string> out;
  for (const auto& p : e.profiles) out.push_back(p.label.name);
  return out;
}

}  // namespace

TEST(Templates, TextRendering) {
  const auto& odd = g2::odd_templates();
  ASSERT_EQ(odd.size(), 6u);
  EXPECT_EQ(odd[0].text(), "((2)^((n-1)/2), (2)^((n-1)/2), (2)^((n-1)/2), (2)^((n-3)/2), (2))");
  EXPECT_EQ(g2::even_templates().size(), 18u);
  EXPECT_EQ(&g2::templates_for(7), &odd);
}

TEST(Enumeration, DegreeThreeKeepsNonnegativeTemplates) {
  auto e = g2::enumerate_profiles(3);
  EXPECT_EQ(names(e), (std::vector<std::string>{"I", "II.ii", "III.ii"}));
  ASSERT_EQ(e.dropped.size(), 3u);
  EXPECT_EQ(e.dropped[0].label.name, "II.i");
  EXPECT_NE(e.dropped[0].reason.find("(n-7)/2 = -2"), std::string::npos);
  const auto* iii = e.find("III.ii");
  ASSERT_NE(iii, nullptr);
  EXPECT_EQ(g2::to_string(iii->profile), "((2), (2), (3), (-))");
  EXPECT_TRUE(iii->rh_ok);
}

TEST(Enumeration, RejectsSmallDegree) {
  EXPECT_THROW(g2::enumerate_profiles(2), g2::InvalidArgument);
}

TEST(Enumeration, OddDegreesSatisfyRiemannHurwitz) {
  for (int n = 3; n <= 21; n += 2)
    for (const auto& p : g2::enumerate_profiles(n).profiles) {
      EXPECT_TRUE(p.rh_ok) << n << " " << p.label.name;
      EXPECT_EQ(p.profile.rh_defect(), 2 * n - 2);
      EXPECT_TRUE(p.fits);
    }
}

TEST(Enumeration, EvenDegreeExceptionsAreFlaggedNotCorrected) {
  const std::set<std::string> expected{"II.5", "II.6", "III.1"};
  for (int n = 4; n <= 20; n += 2) {
    for (const auto& p : g2::enumerate_profiles(n).profiles) {
      bool exception = expected.count(p.label.name) > 0;
      EXPECT_EQ(p.rh_inconsistent(), exception) << n << " " << p.label.name;
      if (exception) {
        EXPECT_NE(p.profile.rh_defect(), 2 * n - 2);
      }
    }
  }
  auto e8 = g2::enumerate_profiles(8);
  EXPECT_EQ(e8.find("II.5")->profile.rh_defect(), 11);
  EXPECT_EQ(e8.find("II.6")->profile.rh_defect(), 3 + 3 + 7 + 4);
  EXPECT_EQ(e8.find("III.1")->profile.rh_defect(), 17);
}

TEST(Enumeration, ParityFilter) {
  // 1 + 1 + 1 + 3 odd-index points over the 2-torsion
  EXPECT_TRUE(g2::weierstrass_parity_ok({3, {{2}, {2}, {2}, {}}}));
  EXPECT_FALSE(g2::weierstrass_parity_ok({3, {{2}, {2}, {3}}}));
  EXPECT_FALSE(g2::weierstrass_parity_ok({4, {{2, 2}, {2, 2}, {2, 2}, {2, 2}}}));
  EXPECT_TRUE(g2::weierstrass_parity_ok({4, {{2}, {2}, {4}, {2, 2}}}));
  for (int n = 3; n <= 21; n += 2)
    for (const auto& p : g2::enumerate_profiles(n).profiles) {
      bool expected = !(n == 3 && p.label.name == "II.ii");
      EXPECT_EQ(p.parity_ok, expected) << n << " " << p.label.name;
    }
  const auto* ii = g2::enumerate_profiles(3).find("II.ii");
  ASSERT_EQ(ii->notes.size(), 1u);
}

TEST(Profile, FullFiberAndText) {
  g2::RamificationProfile p{7, {{2, 2, 2}, {4}}};
  EXPECT_EQ(p.full_fiber(0), (std::vector<int>{2, 2, 2, 1}));
  EXPECT_EQ(p.full_fiber(1), (std::vector<int>{4, 1, 1, 1}));
  EXPECT_EQ(g2::fiber_text({2, 2, 2}), "(2)^3");
  EXPECT_EQ(g2::fiber_text({}), "(-)");
  EXPECT_EQ(p.rh_defect(), 6);
  EXPECT_FALSE((g2::RamificationProfile{3, {{2, 2}}}).fits());
}

TEST(Cover, FiberProfilesIncludingInfinity) {
  g2::RationalMap<Rational> cube(P{0, 0, 0, 1}, P{1});
  EXPECT_EQ(g2::fiber_profile(cube, Pt(Rational(0))), (std::vector<int>{3}));
  EXPECT_EQ(g2::fiber_profile(cube, Pt::infinity()), (std::vector<int>{3}));
  EXPECT_EQ(g2::fiber_profile(cube, Pt(Rational(8))), (std::vector<int>{1, 1, 1}));
  g2::RationalMap<Rational> r(P{0, 0, 1}, P{-1, 1});  // x^2/(x-1)
  EXPECT_EQ(r.degree(), 2);
  EXPECT_EQ(g2::fiber_profile(r, Pt(Rational(4))), (std::vector<int>{2}));
  EXPECT_EQ(g2::fiber_profile(r, Pt::infinity()), (std::vector<int>{1, 1}));
}

TEST(Cover, MapValidation) {
  EXPECT_THROW(g2::RationalMap<Rational>(P{-1, 0, 1}, P{-1, 1}), g2::InvalidArgument);
  EXPECT_THROW(g2::RationalMap<Rational>(P{2}, P{3}), g2::InvalidArgument);
  EXPECT_THROW(g2::RationalMap<Rational>(P{0, 1}, P{}), g2::InvalidArgument);
}

TEST(Cover, VerifyReportsMatchAndMismatch) {
  g2::RationalMap<Rational> phi(P{0, 9, -24, 16}, P{1});
  std::vector<Pt> bp{Pt(Rational(0)), Pt(Rational(1)), Pt::infinity(), Pt(Rational(5))};
  auto claimed = g2::enumerate_profiles(3).find("III.ii")->profile;
  auto ok = g2::verify_cover(phi, bp, claimed);
  EXPECT_TRUE(ok.match);
  EXPECT_TRUE(ok.unramified_elsewhere);
  EXPECT_EQ(ok.defect_listed, 4);

  std::vector<Pt> swapped{Pt::infinity(), Pt(Rational(1)), Pt(Rational(0)), Pt(Rational(5))};
  auto bad = g2::verify_cover(phi, swapped, claimed);
  EXPECT_FALSE(bad.match);
  EXPECT_EQ(bad.diffs.size(), 2u);
  EXPECT_NE(bad.diffs[0].find("expected {2,1}, found {3}"), std::string::npos);
}

TEST(Cover, MatchingCasesIgnoresOrder) {
  auto cases = g2::matching_cases(3, {{1, 1, 1}, {3}, {2, 1}, {2, 1}});
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_EQ(cases[0].name, "III.ii");
  EXPECT_TRUE(g2::matching_cases(3, {{3}, {3}}).empty());
}
