#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2/elliptic/j_invariant.hpp"
#include "g2/errors.hpp"
#include "g2/exact/number_field.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/quadratic.hpp"
#include "g2/exact/resultant.hpp"
#include "g2/exact/sparse.hpp"
#include "g2/families/common.hpp"
#include "g2/families/formulas.hpp"
#include "g2/genus2/igusa.hpp"
#include "g2/ramification/cover.hpp"
#include "g2/ramification/enumerate.hpp"

namespace g2 {

namespace detail {
inline const SparsePolynomial& poly_generic_A() {
  static const auto p = SparsePolynomial::parse(formulas::generic_A, {"a", "c"});
  return p;
}
inline const SparsePolynomial& poly_generic_B() {
  static const auto p = SparsePolynomial::parse(formulas::generic_B, {"a", "c"});
  return p;
}
inline const SparsePolynomial& poly_generic_C() {
  static const auto p = SparsePolynomial::parse(formulas::generic_C, {"a", "c"});
  return p;
}
inline const SparsePolynomial& poly_j1_relation() {
  static const auto p = SparsePolynomial::parse(formulas::degenerate_j1_relation, {"j1", "w1"});
  return p;
}
inline const SparsePolynomial& poly_j_relation() {
  static const auto p = SparsePolynomial::parse(formulas::degenerate_j_relation, {"j", "w1"});
  return p;
}
inline const SparsePolynomial& poly_pair_cubic() {
  static const auto p = [] {
    std::vector<std::string> v{"j", "j1"};
    auto j = SparsePolynomial::variable(v, "j"), j1 = SparsePolynomial::variable(v, "j1");
    auto A = SparsePolynomial::parse("(9*j - 35152)^4", v);
    auto B = SparsePolynomial::parse(formulas::pair_cubic_B, v);
    auto C = SparsePolynomial::parse(formulas::pair_cubic_C, v);
    auto D = SparsePolynomial::parse(formulas::pair_cubic_D_base, v).pow(3);
    return A * j1.pow(3) * Rational(256) + B * j1.pow(2) * Rational(3) + C * j1 * Rational(6) - D;
  }();
  return p;
}
inline const SparsePolynomial& poly_S() {
  static const auto p = SparsePolynomial::parse(formulas::absolutes_S, {"i1", "i2"});
  return p;
}
inline const SparsePolynomial& poly_T() {
  static const auto p = SparsePolynomial::parse(formulas::absolutes_T, {"i1", "i2"});
  return p;
}

/// Solves the linear relation rel(unknown, w1) = 0 for the unknown.
template <class K>
K solve_linear_relation(const SparsePolynomial& rel, const std::string& unknown, const K& w1) {
  Polynomial<K> p = rel.univariate<K>(unknown, {K(0), w1});
  if (p.degree() < 1) throw DegenerateParameter("coefficient of " + unknown, "relation loses " + unknown + " at this w1");
  return (K(0) - p.coeff(0)) / p.coeff(1);
}
}  // namespace detail

// ---------------------------------------------------------------- generic

template <class K>
struct GenericFamilyPoint {
  K a, b, c, d, t, s;
  Genus2Curve<K> curve;  // Y^2 = x(x-1)(x-d)(x^3 - a x^2 + b x - c)
};

template <class K>
GenericFamilyPoint<K> generic_family(const K& a, const K& c) {
  using detail::lit;
  using detail::require_nonzero;
  const K one = lit<K>(1);
  require_nonzero(c, "s=0", "s = 4c/(a-1)^2 with c = 0");
  const K am1 = a - one, den = lit<K>(2) * a - lit<K>(3);
  require_nonzero(am1, "a-1", "(a-1)^2 divides b and s");
  require_nonzero(den, "2a-3", "2a-3 divides d, b and t");
  const K am1_2 = am1 * am1;
  K b = den * c / am1_2 + a * a / lit<K>(4);
  K d = a * (a - lit<K>(2)) / den;
  K t = a * a * a * (a - lit<K>(2)) / (den * den * den);
  K s = lit<K>(4) * c / am1_2;
  require_nonzero(t, "t=0", "t = a^3(a-2)/(2a-3)^3");
  require_nonzero(t - one, "t=1", "t = a^3(a-2)/(2a-3)^3 collides with 1");
  require_nonzero(s - one, "s=1", "(a-1)^2 = 4c");
  require_nonzero(t - s, "t=s", "branch points t and s collide");
  Polynomial<K> f = detail::roots_times<K>({K(0), one, d}, Polynomial<K>{K(0) - c, b, K(0) - a, one});
  Genus2Curve<K> curve(f);
  if (!curve.is_smooth()) throw DegenerateParameter("disc(f)", "x(x-1)(x-d)(x^3-ax^2+bx-c) has a repeated root");
  return {a, b, c, d, t, s, curve};
}

/// j(E1) = 16 A^3 / (C^2 a^6 c^2 (a-1)^2 (a-2)^2 (a-3)^6 ((a-1)^2-4c)^2)
template <class K>
K generic_j1(const K& a, const K& c) {
  using detail::lit;
  using detail::require_nonzero;
  K A = detail::poly_generic_A().evaluate<K>({a, c});
  K C = detail::poly_generic_C().evaluate<K>({a, c});
  const K am1 = a - lit<K>(1), am2 = a - lit<K>(2), am3 = a - lit<K>(3);
  const K e = am1 * am1 - lit<K>(4) * c;
  require_nonzero(C, "C", "a^6-4a^5+5a^4-2a^3-32a^3c+144ca^2-216ca+108c");
  require_nonzero(a, "a", "a^6 in the j1 denominator");
  require_nonzero(c, "c", "c^2 in the j1 denominator");
  require_nonzero(am1, "a-1", "(a-1)^2 in the j1 denominator");
  require_nonzero(am2, "a-2", "(a-2)^2 in the j1 denominator");
  require_nonzero(am3, "a-3", "(a-3)^6 in the j1 denominator");
  require_nonzero(e, "(a-1)^2-4c", "((a-1)^2-4c)^2 in the j1 denominator");
  K a2 = a * a, a6 = a2 * a2 * a2, am3_2 = am3 * am3;
  K den = C * C * a6 * c * c * am1 * am1 * am2 * am2 * am3_2 * am3_2 * am3_2 * e * e;
  return lit<K>(16) * A * A * A / den;
}

/// j(E2) = -16 B^3 / (C c ((a-1)^2-4c))
template <class K>
K generic_j2(const K& a, const K& c) {
  using detail::lit;
  using detail::require_nonzero;
  K B = detail::poly_generic_B().evaluate<K>({a, c});
  K C = detail::poly_generic_C().evaluate<K>({a, c});
  const K am1 = a - lit<K>(1);
  const K e = am1 * am1 - lit<K>(4) * c;
  require_nonzero(C, "C", "a^6-4a^5+5a^4-2a^3-32a^3c+144ca^2-216ca+108c");
  require_nonzero(c, "c", "c in the j2 denominator");
  require_nonzero(e, "(a-1)^2-4c", "(a-1)^2-4c in the j2 denominator");
  return lit<K>(-16) * B * B * B / (C * c * e);
}

/// The degree-3 map z = -4/(2a-3) * x (x - a/2)^2 / (x - (a-1)^2/(2a-3)) and
/// the branch points 0, 1, t, s, infinity of its generic profile.
template <class K>
RationalMap<K> generic_cover(const GenericFamilyPoint<K>& p) {
  using detail::lit;
  const K den = lit<K>(2) * p.a - lit<K>(3);
  const K half_a = p.a / lit<K>(2);
  Polynomial<K> num = Polynomial<K>{K(0), lit<K>(1)} * pow(Polynomial<K>{K(0) - half_a, lit<K>(1)}, 2) *
                      (lit<K>(-4) / den);
  const K am1 = p.a - lit<K>(1);
  return RationalMap<K>(num, Polynomial<K>{K(0) - am1 * am1 / den, lit<K>(1)});
}

template <class K>
std::vector<ProjectivePoint<K>> generic_branch_points(const GenericFamilyPoint<K>& p) {
  return {ProjectivePoint<K>(K(0)), ProjectivePoint<K>(detail::lit<K>(1)), ProjectivePoint<K>(p.t),
          ProjectivePoint<K>(p.s), ProjectivePoint<K>::infinity()};
}

// ------------------------------------------------------------- degenerate

template <class K>
struct DegenerateFamilyPoint {
  using E = NumberFieldElement<K>;
  E w1, w2, w3, s, k2;
  Genus2Curve<E> curve;  // Y^2 = x(x-1)(x-w1)(x-w2)(x-w3)
  RationalMap<E> cover;  // z = k2 (x-w1)^3 / (x(x-1))
  std::vector<ProjectivePoint<E>> branch_points;  // s, 1, 0, infinity
};

/// w2^2 - (4w1^3 - 6w1^2 + 4w1) w2 + w1^4, the quadratic tying w2 to w1.
template <class K>
Polynomial<K> w2_quadratic(const K& w1) {
  using detail::lit;
  K w1_2 = w1 * w1;
  return Polynomial<K>{w1_2 * w1_2, K(0) - (lit<K>(4) * w1_2 * w1 - lit<K>(6) * w1_2 + lit<K>(4) * w1),
                       lit<K>(1)};
}

/// Both Galois-conjugate points of the family over w1.
template <class K>
std::array<DegenerateFamilyPoint<K>, 2> degenerate_family(const K& w1_in) {
  using E = NumberFieldElement<K>;
  using detail::lit;
  using detail::require_nonzero;
  require_nonzero(w1_in, "w1", "Weierstrass points 0 and w1 collide");
  require_nonzero(w1_in - lit<K>(1), "w1-1", "Weierstrass points 1 and w1 collide");
  Polynomial<K> q = w2_quadratic(w1_in);
  require_nonzero(q.coeff(1) * q.coeff(1) - lit<K>(4) * q.coeff(0), "disc(w2)",
                  "the w2 quadratic has a double root");
  auto roots = solve_quadratic(q.coeff(2), q.coeff(1), q.coeff(0));

  auto build = [&](const E& w2) -> DegenerateFamilyPoint<K> {
    const E w1(w1_in), one = lit<E>(1);
    const E w1_2 = w1 * w1, w1_3 = w1_2 * w1;
    const E f7 = lit<E>(4) * w1_3 - lit<E>(7) * w1_2 + lit<E>(4) * w1 - w2;
    const E f3 = lit<E>(4) * w1_3 - lit<E>(3) * w1_2 - w2;
    const E f6 = lit<E>(4) * w1_3 - lit<E>(6) * w1_2 + lit<E>(3) * w1 - w2;
    const E f5 = lit<E>(4) * w1_3 - lit<E>(5) * w1_2 + lit<E>(2) * w1 - w2;
    const E f9 = lit<E>(4) * w1_3 - lit<E>(9) * w1_2 - w2 + lit<E>(6) * w1;
    require_nonzero(f6, "4w1^3-6w1^2+3w1-w2", "denominator of w3 and s");
    require_nonzero(f3, "4w1^3-3w1^2-w2", "denominator of s");
    require_nonzero(f9, "4w1^3-9w1^2-w2+6w1", "denominator of s");
    const E wm1 = w1 - one;
    E w3 = f7 * f7 * f7 * f3 / (lit<E>(16) * w1_3 * wm1 * wm1 * wm1 * f6);
    E inner = w1 * wm1 * f7 * f5 / (f9 * f3 * f6);
    E s = lit<E>(-27) * inner * inner;
    require_nonzero(w3 - w1, "w3-w1", "the triple point meets w3");
    E k2 = w3 * (w3 - one) / ((w3 - w1) * (w3 - w1) * (w3 - w1));
    Polynomial<E> f = detail::roots_times<E>({E(0), one, w1, w2, w3}, Polynomial<E>(one));
    Genus2Curve<E> curve(f);
    if (!curve.is_smooth()) throw DegenerateParameter("disc(f)", "Weierstrass points 0, 1, w1, w2, w3 not distinct");
    Polynomial<E> num = pow(Polynomial<E>{E(0) - w1, one}, 3) * k2;
    RationalMap<E> cover(num, Polynomial<E>{E(0), E(0) - one, one});
    std::vector<ProjectivePoint<E>> bp{ProjectivePoint<E>(s), ProjectivePoint<E>(one), ProjectivePoint<E>(E(0)),
                                       ProjectivePoint<E>::infinity()};
    return {w1, w2, w3, s, k2, curve, cover, bp};
  };
  return {build(roots.first), build(roots.second)};
}

/// The j1 solving the j1-w1 relation (j1 is the j-invariant of y^2 = z(z-1)(z-s)).
template <class K>
K degenerate_j1(const K& w1) {
  return detail::solve_linear_relation(detail::poly_j1_relation(), "j1", w1);
}

/// The j solving the j-w1 relation (j of y^2 = (x-w1)(x-w2)(x-w3)).
template <class K>
K degenerate_j(const K& w1) {
  return detail::solve_linear_relation(detail::poly_j_relation(), "j", w1);
}

/// 256 A(j) j1^3 + 3 B(j) j1^2 + 6 C(j) j1 - D(j) at a pair (j, j1).
template <class K>
K pair_cubic_value(const K& j, const K& j1) {
  return detail::poly_pair_cubic().evaluate<K>({j, j1});
}

/// The cubic above as a polynomial in j1 at fixed j.
template <class K>
Polynomial<K> pair_cubic(const K& j) {
  return detail::poly_pair_cubic().univariate<K>("j1", {j, K(0)});
}

/// Roots in j1 of the cubic at a rational j, with multiplicity.
inline std::vector<ExactRoot> j_pair_cubic(const Rational& j) {
  if (is_zero(Rational(9) * j - Rational(35152)))
    throw DegenerateParameter("A(j)", "(9j-35152)^4 vanishes, the cubic drops degree");
  return exact_roots(pair_cubic(j));
}

/// j = 13824 S(i1, i2) / T(i1, i2).
template <class K>
K j_from_absolutes(const K& i1, const K& i2) {
  K S = detail::poly_S().evaluate<K>({i1, i2});
  K T = detail::poly_T().evaluate<K>({i1, i2});
  detail::require_nonzero(T, "T", "T(i1, i2) vanishes");
  return detail::lit<K>(13824) * S / T;
}

inline RamificationProfile claimed_profile(int n, const std::string& name) {
  const Enumeration all = enumerate_profiles(n);
  const auto* e = all.find(name);
  if (!e) throw InvalidArgument("no case " + name + " at degree " + std::to_string(n));
  return e->profile;
}

// ---------------------------------------------------- totally ramified at infinity

template <class K>
struct TripleFamilyPoint {
  K t;
  Genus2Curve<K> curve;  // Y^2 = x(x-1)(x^3 - 3/2 x^2 + 9/16 x - t/16)
  Legendre<K> elliptic;
  RationalMap<K> cover;  // z = 16 x (x - 3/4)^2
  std::vector<ProjectivePoint<K>> branch_points;  // 0, 1, infinity, t
};

template <class K>
TripleFamilyPoint<K> triple_point_family(const K& t) {
  using detail::lit;
  detail::require_nonzero(t, "t=0", "Legendre parameter t = 0");
  detail::require_nonzero(t - lit<K>(1), "t=1", "Legendre parameter t = 1");
  Polynomial<K> f3{K(0) - t / lit<K>(16), lit<K>(9, 16), lit<K>(-3, 2), lit<K>(1)};
  Genus2Curve<K> curve(detail::roots_times<K>({K(0), lit<K>(1)}, f3));
  if (!curve.is_smooth()) throw DegenerateParameter("disc(f)", "x(x-1)f3(x) has a repeated root");
  RationalMap<K> cover(Polynomial<K>{K(0), lit<K>(9), lit<K>(-24), lit<K>(16)}, Polynomial<K>(lit<K>(1)));
  return {t, curve, Legendre<K>{t}, cover,
          {ProjectivePoint<K>(K(0)), ProjectivePoint<K>(lit<K>(1)), ProjectivePoint<K>::infinity(),
           ProjectivePoint<K>(t)}};
}

// ------------------------------------------------------------------ table

struct BothDegenerateRow {
  NumberField t1, t2;  // E_i: y^2 = z(z-1)(z-t_i)
  NumberField j1, j2;
  Genus2Curve<NumberField> curve;
  AbsoluteInvariants<NumberField> invariants;
};

/// The two classes where both subcovers are degenerate. Row 2 lives in
/// Q(y), y^2 = -2 (y = i sqrt 2).
inline std::vector<BothDegenerateRow> both_degenerate_table() {
  using E = NumberField;
  auto row = [](const E& t1, const E& t2) {
    auto p = triple_point_family<E>(t1);
    return BothDegenerateRow{t1, t2, j_from_lambda(t1), j_from_lambda(t2), p.curve,
                             absolute_invariants(p.curve)};
  };
  auto m = E::make_modulus(RationalPolynomial{Rational(2), Rational(0), Rational(1)});
  E y = E::generator(m);
  E top = E(Rational(241)) + E(Rational(22)) * y;
  return {row(E(Rational(1, 2)), E(Rational(-1))),
          row(top / (E(Rational(-2)) + E(Rational(22)) * y), top / E(Rational(243)))};
}

}  // namespace g2
