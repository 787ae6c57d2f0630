#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "g2/errors.hpp"
#include "g2/exact/number_field.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/real_roots.hpp"
#include "g2/exact/quadratic.hpp"
#include "g2/exact/sparse.hpp"
#include "g2/exact/squarefree.hpp"

namespace g2 {

namespace detail {

template <class K>
void require_nonzero(const K& v, const std::string& quantity, const std::string& expression) {
  if (is_zero(v)) throw DegenerateParameter(quantity, expression);
}

template <class K>
K lit(long v) {
  return K(Rational(v));
}

template <class K>
K lit(long n, long d) {
  return K(Rational(n, d));
}

/// x(x-1)...(x-r) style product of linear factors times an extra polynomial.
template <class K>
Polynomial<K> roots_times(const std::vector<K>& roots, Polynomial<K> extra) {
  for (const auto& r : roots) extra = extra * Polynomial<K>{K(0) - r, lit<K>(1)};
  return extra;
}

}  // namespace detail

/// One root of a rational polynomial: a rational number (no modulus) or the
/// class of the variable in Q[y]/(factor), standing for `conjugates` roots.
struct ExactRoot {
  NumberField value;
  int multiplicity;
  int conjugates;
};

/// All roots of p up to conjugacy: rational roots exactly, quadratic
/// leftovers in their splitting field, and any higher-degree leftover as a
/// generic root of its (possibly reducible) squarefree factor.
inline std::vector<ExactRoot> exact_roots(const RationalPolynomial& p) {
  std::vector<ExactRoot> out;
  for (const auto& sf : squarefree_decomposition(p)) {
    RationalPolynomial rest = sf.factor;
    for (const auto& [r, m] : rational_roots(sf.factor)) {
      (void)m;
      out.push_back({NumberField(r), sf.multiplicity, 1});
      rest = divmod(rest, RationalPolynomial{-r, Rational(1)}).first;
    }
    if (rest.degree() == 2) {
      auto q = solve_quadratic(rest[2], rest[1], rest[0]);
      out.push_back({q.first, sf.multiplicity, 1});
      out.push_back({q.second, sf.multiplicity, 1});
    } else if (rest.degree() > 2) {
      auto m = NumberField::make_modulus(rest);
      out.push_back({NumberField::generator(m), sf.multiplicity, rest.degree()});
    }
  }
  return out;
}

}  // namespace g2
