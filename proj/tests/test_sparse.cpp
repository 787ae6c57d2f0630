#include <gtest/gtest.h>

#include "g2/exact.hpp"

using g2::Rational;
using g2::SparsePolynomial;
using P = g2::RationalPolynomial;

TEST(Sparse, ParsesAndEvaluates) {
  auto p = SparsePolynomial::parse("3*x^2*y - (x - 2*y)^2 + 7/2", {"x", "y"});
  EXPECT_EQ(p.evaluate<Rational>({Rational(1), Rational(2)}), Rational(6 - 9) + Rational(7, 2));
  EXPECT_EQ(p.degree_in("x"), 2u);
  EXPECT_EQ(p.degree_in("y"), 2u);
  EXPECT_EQ(p.total_degree(), 3u);
  EXPECT_EQ(p.constant_term(), Rational(7, 2));
}

TEST(Sparse, ImplicitSignsAndDivisionByConstants) {
  auto p = SparsePolynomial::parse("-x^3/4 + -2*x", {"x"});
  EXPECT_EQ(p.as_univariate("x"), (P{0, -2, 0, Rational(-1, 4)}));
}

TEST(Sparse, RejectsMalformedInput) {
  EXPECT_THROW(SparsePolynomial::parse("x^", {"x"}), g2::ParseError);
  EXPECT_THROW(SparsePolynomial::parse("x*z", {"x"}), g2::InvalidArgument);
  EXPECT_THROW(SparsePolynomial::parse("(x+1", {"x"}), g2::ParseError);
  EXPECT_THROW(SparsePolynomial::parse("1/x", {"x"}), g2::ParseError);
}

TEST(Sparse, UnivariateCollectsOtherVariables) {
  auto p = SparsePolynomial::parse("x^2*y + x*y^2 + 1", {"x", "y"});
  auto u = p.univariate<Rational>("y", {Rational(2), Rational(0)});
  EXPECT_EQ(u, (P{1, 4, 2}));
  EXPECT_THROW(p.as_univariate("x"), g2::InvalidArgument);
}

TEST(Sparse, ArithmeticAgreesWithEvaluation) {
  std::vector<std::string> v{"a", "b"};
  auto p = SparsePolynomial::parse("a^2 - 3*b + 1", v), q = SparsePolynomial::parse("a*b - 2", v);
  std::vector<Rational> at{Rational(3, 2), Rational(-5, 3)};
  EXPECT_EQ((p * q).evaluate(at), p.evaluate(at) * q.evaluate(at));
  EXPECT_EQ((p + q).evaluate(at), p.evaluate(at) + q.evaluate(at));
  EXPECT_EQ((p - q).evaluate(at), p.evaluate(at) - q.evaluate(at));
  EXPECT_EQ(p.pow(3).evaluate(at), p.evaluate(at).pow(3));
  EXPECT_EQ(p - p, SparsePolynomial(v));
}

TEST(Bivariate, ResultantEliminatesOuterVariable) {
  std::vector<std::string> v{"x", "y"};
  auto P1 = g2::BivariatePolynomial::from_sparse(SparsePolynomial::parse("x^2 + y^2 - 1", v), "x", "y");
  auto P2 = g2::BivariatePolynomial::from_sparse(SparsePolynomial::parse("x - y", v), "x", "y");
  EXPECT_EQ(g2::bivariate_resultant(P1, P2), (P{-1, 0, 2}));
  auto P3 = g2::BivariatePolynomial::from_sparse(SparsePolynomial::parse("y - 1", v), "x", "y");
  EXPECT_THROW(g2::bivariate_resultant(P1, P3), g2::InvalidArgument);
}
