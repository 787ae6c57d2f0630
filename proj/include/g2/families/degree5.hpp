#pragma once

#include "g2/elliptic/j_invariant.hpp"
#include "g2/errors.hpp"
#include "g2/exact/number_field.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/quadratic.hpp"
#include "g2/exact/sparse.hpp"
#include "g2/families/common.hpp"
#include "g2/families/formulas.hpp"
#include "g2/genus2/igusa.hpp"

namespace g2 {

namespace detail {
inline const SparsePolynomial& poly_deg5_conic() {
  static const auto p = SparsePolynomial::parse(
      "15*u^4 - 82*u^3 - 8*v*u^2 + 159*u^2 - 140*u + 56*v*u - 16*v^2 - 52*v + 50", {"u", "v"});
  return p;
}
inline const RationalPolynomial& poly_deg5_A() {
  static const auto p =
      SparsePolynomial::parse("(u-1)^2*(u-2)^2*(3*u-4)^6*(3*u-5)^6*(2*u^2-6*u+5)^8", {"u"})
          .as_univariate("u");
  return p;
}
inline const RationalPolynomial& poly_deg5_B() {
  static const auto p = [] {
    std::vector<std::string> v{"u"};
    auto inner = SparsePolynomial::parse(formulas::deg5_B_inner, v);
    auto q = SparsePolynomial::parse("(2*u^2-6*u+5)^4", v);
    return (inner * q * Rational(-16)).as_univariate("u");
  }();
  return p;
}
inline const RationalPolynomial& poly_deg5_C() {
  static const auto p =
      (SparsePolynomial::parse(formulas::deg5_C_inner, {"u"}).pow(3) * Rational(256)).as_univariate("u");
  return p;
}
}  // namespace detail

/// Residual of 15u^4 - 82u^3 - 8vu^2 + 159u^2 - 140u + 56vu - 16v^2 - 52v + 50.
template <class K>
K deg5_conic(const K& u, const K& v) {
  return detail::poly_deg5_conic().evaluate<K>({u, v});
}

/// Both v on the conic over u.
template <class K>
QuadraticRoots<K> deg5_solve_v(const K& u) {
  Polynomial<K> q = detail::poly_deg5_conic().univariate<K>("v", {u, K(0)});
  return solve_quadratic(q.coeff(2), q.coeff(1), q.coeff(0));
}

template <class K>
struct Degree5FamilyPoint {
  K u, v, d, w, t;
  Genus2Curve<K> curve;  // Y^2 = x(x-1)(x-d)(x^3 - u x^2 + v x - w)
  Legendre<K> elliptic;
};

template <class K>
Degree5FamilyPoint<K> deg5_family(const K& u, const K& v) {
  using detail::lit;
  using detail::require_nonzero;
  if (!is_zero(deg5_conic(u, v))) throw InvalidArgument("(u, v) is not on the conic");
  const K one = lit<K>(1), u2 = u * u;
  const K den1 = lit<K>(2) * u - lit<K>(3);
  const K den2 = lit<K>(6) * u2 - lit<K>(10) * u + lit<K>(5) - lit<K>(8) * v;
  require_nonzero(den1, "2u-3", "denominator of d, w and t");
  require_nonzero(den2, "6u^2-10u+5-8v", "denominator of d and t");
  const K e = lit<K>(3) * u2 - lit<K>(4) * u - lit<K>(4) * v + one;
  const K uv = u2 - lit<K>(4) * v;
  K d = e * e / (den1 * den2);
  K w = K(0) - (u2 - lit<K>(6) * u + lit<K>(4) * v + lit<K>(5)) * uv / (lit<K>(8) * den1);
  K tn = lit<K>(-8) * u2 * u2 + lit<K>(24) * u2 * u + lit<K>(63) * u2 + lit<K>(64) * v * v -
         lit<K>(192) * u * v + lit<K>(196) * v + lit<K>(16) * u2 * v - lit<K>(180) * u + lit<K>(100);
  K t = uv * tn / (den1 * den2);
  require_nonzero(t, "t=0", "Legendre parameter t = 0");
  require_nonzero(t - one, "t=1", "Legendre parameter t = 1");
  Polynomial<K> f = detail::roots_times<K>({K(0), one, d}, Polynomial<K>{K(0) - w, v, K(0) - u, one});
  Genus2Curve<K> curve(f);
  if (!curve.is_smooth()) throw DegenerateParameter("disc(f)", "x(x-1)(x-d)(x^3-ux^2+vx-w) has a repeated root");
  return {u, v, d, w, t, curve, Legendre<K>{t}};
}

template <class K>
struct JQuadratic {
  K A, B, C;
  QuadraticRoots<K> roots;
};

/// A(u) j^2 + B(u) j + C(u) and its two roots.
template <class K>
JQuadratic<K> deg5_j_quadratic(const K& u) {
  K A = detail::poly_deg5_A()(u);
  detail::require_nonzero(A, "A(u)", "(u-1)^2(u-2)^2(3u-4)^6(3u-5)^6(2u^2-6u+5)^8 vanishes");
  K B = detail::poly_deg5_B()(u);
  K C = detail::poly_deg5_C()(u);
  return {A, B, C, solve_quadratic(A, B, C)};
}

/// B(u)^2 - 4 A(u) C(u) as a polynomial in u.
inline RationalPolynomial deg5_discriminant() {
  const auto& A = detail::poly_deg5_A();
  const auto& B = detail::poly_deg5_B();
  const auto& C = detail::poly_deg5_C();
  return B * B - A * C * Rational(4);
}

inline const RationalPolynomial& deg5_A_poly() { return detail::poly_deg5_A(); }
inline const RationalPolynomial& deg5_B_poly() { return detail::poly_deg5_B(); }
inline const RationalPolynomial& deg5_C_poly() { return detail::poly_deg5_C(); }

/// A(u) j^2 + B(u) j + C(u) at j = j(E1) for the family point.
template <class K>
K deg5_membership_residual(const Degree5FamilyPoint<K>& p) {
  K j = j_from_lambda(p.t);
  return detail::poly_deg5_A()(p.u) * j * j + detail::poly_deg5_B()(p.u) * j + detail::poly_deg5_C()(p.u);
}

}  // namespace g2
