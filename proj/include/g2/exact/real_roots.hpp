#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "g2/exact/polynomial.hpp"
#include "g2/exact/rational.hpp"
#include "g2/exact/squarefree.hpp"

namespace g2 {

namespace detail {

inline int sign_changes(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

/// Scales p to a primitive polynomial with integer coefficients.
inline RationalPolynomial primitive_integer(const RationalPolynomial& p) {
  Integer den = 1, num = 0;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  }
  for (const auto& c : p.coefficients()) {
    Integer v = c.numerator() * (den / c.denominator());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  return p * Rational(den, num);
}

}  // namespace detail

/// Number of distinct real roots of p in (lo, hi].
inline int count_real_roots(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  auto seq = detail::sturm_sequence(squarefree_part(p));
  return detail::sign_changes(seq, lo) - detail::sign_changes(seq, hi);
}

/// Rational roots with multiplicities, ascending. Each squarefree factor is
/// made primitive over Z with leading coefficient L, its real roots are
/// isolated with Sturm sequences and narrowed below width 1/L; the only
/// rational candidate in such an interval is round(mid*L)/L, tested exactly.
inline std::vector<std::pair<Rational, int>> rational_roots(const RationalPolynomial& p) {
  std::vector<std::pair<Rational, int>> out;
  for (const auto& sf : squarefree_decomposition(p)) {
    RationalPolynomial f = detail::primitive_integer(sf.factor);
    if (f.leading().sign() < 0) f = -f;
    const Rational L = f.leading();
    Rational bound = 1;
    for (const auto& c : f.coefficients()) bound = std::max(bound, Rational(1) + (c / L).abs());
    auto seq = detail::sturm_sequence(f);
    const Rational width = Rational(1) / L;

    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
      auto [lo, hi] = work.back();
      work.pop_back();
      int n = detail::sign_changes(seq, lo) - detail::sign_changes(seq, hi);
      if (n == 0) continue;
      if (n == 1 && hi - lo < width) {
        Rational mid = (lo + hi) / 2;
        Rational cand(floor(mid * L + Rational(1, 2)), 1);
        cand = cand / L;
        if (cand > lo && cand <= hi && f(cand).is_zero()) out.emplace_back(cand, sf.multiplicity);
        continue;
      }
      Rational mid = (lo + hi) / 2;
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace g2
