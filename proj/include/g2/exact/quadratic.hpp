#pragma once

#include <utility>

#include "g2/errors.hpp"
#include "g2/exact/number_field.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/rational.hpp"

namespace g2 {

/// D = s^2 * r with r an integer freed of all square factors p^2, p < 2^16,
/// and of a trailing perfect square. Enough to present Q(sqrt D) as Q(sqrt r)
/// with a small r; r need not be fully squarefree for correctness.
inline std::pair<Rational, Integer> split_square(const Rational& D) {
  Integer n = D.numerator() * D.denominator();
  Rational s(Integer(1), D.denominator());
  Integer sign = n < 0 ? Integer(-1) : Integer(1);
  n = abs(n);
  for (unsigned long p = 2; p < 65536 && p * p <= n; ++p) {
    Integer pp = Integer(p) * Integer(p);
    while (n % pp == 0) {
      n /= pp;
      s = s * Rational(static_cast<long>(p));
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    s = s * Rational(r);
    n = 1;
  }
  return {s, sign * n};
}

template <class K>
struct QuadraticRoots {
  NumberFieldElement<K> first, second;  // (-b + sqrt D)/2a, (-b - sqrt D)/2a
};

/// Roots of a x^2 + b x + c. Over Q: rational when the discriminant is a
/// square, otherwise elements of Q[y]/(y^2 - r) with D = s^2 r. Over any other
/// base K: elements of K[y]/(y^2 - D).
template <class K>
QuadraticRoots<K> solve_quadratic(const K& a, const K& b, const K& c) {
  if (is_zero(a)) throw InvalidArgument("quadratic with vanishing leading coefficient");
  using E = NumberFieldElement<K>;
  const K D = b * b - K(4) * a * c;
  const E two_a = E(K(2) * a);
  if constexpr (std::is_same_v<K, Rational>) {
    Rational root;
    if (rational_sqrt(D, root)) {
      return {E((-b + root) / (Rational(2) * a)), E((-b - root) / (Rational(2) * a))};
    }
    auto [s, r] = split_square(D);
    auto m = E::make_modulus(RationalPolynomial{Rational(Integer(-r)), Rational(0), Rational(1)});
    E y = E::generator(m) * E(s);
    return {(E(-b) + y) / two_a, (E(-b) - y) / two_a};
  } else {
    if (is_zero(D)) return {E(K(0) - b) / two_a, E(K(0) - b) / two_a};
    auto m = E::make_modulus(Polynomial<K>{K(0) - D, K(0), K(1)});
    E y = E::generator(m);
    return {(E(K(0) - b) + y) / two_a, (E(K(0) - b) - y) / two_a};
  }
}

/// Roots of a x^2 + b x + c over Q.
inline QuadraticRoots<Rational> nf_solve_quadratic(const Rational& a, const Rational& b,
                                                   const Rational& c) {
  return solve_quadratic(a, b, c);
}

}  // namespace g2
