#pragma once

#include <optional>
#include <vector>

#include "g2/errors.hpp"
#include "g2/exact/number_field.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/rational.hpp"
#include "g2/exact/sparse.hpp"
#include "g2/exact/squarefree.hpp"
#include "g2/families/common.hpp"
#include "g2/families/formulas.hpp"
#include "g2/genus2/igusa.hpp"

namespace g2 {

namespace detail {
inline const std::vector<std::string>& deg7_vars() {
  static const std::vector<std::string> v{"d", "t"};
  return v;
}
inline const SparsePolynomial& poly_deg7_constraint() {
  static const auto p = SparsePolynomial::parse(formulas::deg7_constraint, deg7_vars());
  return p;
}
inline const SparsePolynomial& poly_deg7_a() {
  static const auto p = SparsePolynomial::parse(formulas::deg7_a_num, deg7_vars());
  return p;
}
inline const SparsePolynomial& poly_deg7_b() {
  static const auto p = SparsePolynomial::parse(formulas::deg7_b_num, deg7_vars());
  return p;
}
inline const SparsePolynomial& poly_deg7_c_inner() {
  static const auto p = SparsePolynomial::parse(formulas::deg7_c_inner, deg7_vars());
  return p;
}
inline const SparsePolynomial& poly_deg7_A() {
  static const auto p = SparsePolynomial::variable(deg7_vars(), "d") *
                        SparsePolynomial::parse(formulas::deg7_A_first, deg7_vars()) *
                        SparsePolynomial::parse(formulas::deg7_A_second, deg7_vars());
  return p;
}
}  // namespace detail

template <class K>
K deg7_constraint(const K& d, const K& t) {
  return detail::poly_deg7_constraint().evaluate<K>({d, t});
}

/// The constraint as a quartic in t at fixed d.
inline RationalPolynomial deg7_quartic(const Rational& d) {
  return detail::poly_deg7_constraint().univariate<Rational>("t", {d, Rational(0)});
}

/// Roots t of the constraint at d, up to conjugacy.
inline std::vector<ExactRoot> deg7_solve_t(const Rational& d) {
  RationalPolynomial q = deg7_quartic(d);
  if (q.is_zero()) throw DegenerateParameter("constraint", "vanishes identically at this d");
  return exact_roots(q);
}

template <class K>
struct Degree7Coefficients {
  K a, b, c;
  K A;        // common denominator factor d * first * second
  K c_inner;  // c = -c_inner^2 / (448 A)
};

template <class K>
Degree7Coefficients<K> deg7_coefficients(const K& d, const K& t) {
  using detail::lit;
  if (!is_zero(deg7_constraint(d, t))) throw InvalidArgument("(d, t) is not on the constraint curve");
  K A = detail::poly_deg7_A().evaluate<K>({d, t});
  detail::require_nonzero(A, "A", "common denominator A(t, d) vanishes");
  K an = detail::poly_deg7_a().evaluate<K>({d, t});
  K bn = detail::poly_deg7_b().evaluate<K>({d, t});
  K ci = detail::poly_deg7_c_inner().evaluate<K>({d, t});
  return {K(0) - an / (lit<K>(4) * A), bn / (lit<K>(16) * A), K(0) - ci * ci / (lit<K>(448) * A), A, ci};
}

template <class K>
struct Degree7FamilyPoint {
  K d, t;
  Degree7Coefficients<K> coefficients;
  Genus2Curve<K> curve;  // Y^2 = x(x-1)(x-d)(x^3 - a x^2 + b x - c)
};

template <class K>
Degree7FamilyPoint<K> deg7_family(const K& d, const K& t) {
  using detail::lit;
  auto co = deg7_coefficients(d, t);
  Polynomial<K> f = detail::roots_times<K>(
      {K(0), lit<K>(1), d}, Polynomial<K>{K(0) - co.c, co.b, K(0) - co.a, lit<K>(1)});
  return {d, t, co, Genus2Curve<K>(f)};
}

/// g with g^2 = p and positive leading coefficient, if one exists over Q.
/// Coefficients are peeled off from the top; the square is then rechecked.
inline std::optional<RationalPolynomial> polynomial_sqrt(const RationalPolynomial& p) {
  if (p.is_zero()) return RationalPolynomial{};
  if (p.degree() % 2) return std::nullopt;
  const int m = p.degree() / 2;
  Rational lc;
  if (!rational_sqrt(p.leading(), lc)) return std::nullopt;
  std::vector<Rational> g(m + 1);
  g[m] = lc;
  for (int k = 1; k <= m; ++k) {
    Rational acc = p[2 * m - k];
    for (int i = m - k + 1; i < m; ++i) acc -= g[i] * g[2 * m - k - i];
    g[m - k] = acc / (Rational(2) * lc);
  }
  RationalPolynomial root(g);
  if (root * root != p) return std::nullopt;
  return root;
}

inline bool is_perfect_square(const RationalPolynomial& p) { return polynomial_sqrt(p).has_value(); }

/// The numerator of c, read as a polynomial in t at fixed d, is a square.
/// The root found is the stored inner polynomial up to sign.
inline bool deg7_c_numerator_is_square(const Rational& d) {
  const auto inner = detail::poly_deg7_c_inner().univariate<Rational>("t", {d, Rational(0)});
  auto root = polynomial_sqrt(inner * inner);
  return root && (*root == inner || *root == RationalPolynomial{} - inner);
}

/// Degree bookkeeping for the map shape z = k x P1(x)^2 / (x^3 - a x^2 + b x - c)
/// with deg P1 = 3: the fiber over 0 and the pole at infinity, as a partial profile.
struct Degree7MapShape {
  int degree;                      // max(1 + 2 deg P1, 3)
  std::vector<int> fiber_over_zero;  // ramified points of x P1^2
  std::vector<int> fiber_over_infinity;
};

inline Degree7MapShape deg7_map_shape() {
  const int p1 = 3, den = 3;
  const int n = 1 + 2 * p1;
  return {n, std::vector<int>(p1, 2), {n - den}};
}

}  // namespace g2
