#pragma once

#include <random>
#include <vector>

#include "g2/exact.hpp"

namespace testing_support {

inline g2::Rational random_rational(std::mt19937& rng, int num = 30, int den = 9) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return g2::Rational(n(rng), d(rng));
}

inline g2::Rational random_nonzero(std::mt19937& rng, int num = 30, int den = 9) {
  g2::Rational r;
  do r = random_rational(rng, num, den);
  while (r.is_zero());
  return r;
}

inline g2::RationalPolynomial random_poly(std::mt19937& rng, int degree, int num = 9, int den = 4) {
  std::vector<g2::Rational> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_rational(rng, num, den));
  c.push_back(random_nonzero(rng, num, den));
  return g2::RationalPolynomial(c);
}

/// prod (x - r_i)^{m_i} times a nonzero constant.
inline g2::RationalPolynomial from_roots(const std::vector<std::pair<g2::Rational, int>>& roots,
                                          const g2::Rational& lead = g2::Rational(1)) {
  g2::RationalPolynomial p{lead};
  for (const auto& [r, m] : roots)
    for (int k = 0; k < m; ++k) p = p * g2::RationalPolynomial{-r, g2::Rational(1)};
  return p;
}

}  // namespace testing_support
