#pragma once

#include <string>
#include <utility>
#include <vector>

#include "g2/errors.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/rational.hpp"
#include "g2/exact/resultant.hpp"
#include "g2/exact/sparse.hpp"

namespace g2 {

/// Polynomial in two named indeterminates over Q, stored as a polynomial in
/// the first (`outer`) with coefficients in Q[inner].
class BivariatePolynomial {
 public:
  using Inner = RationalPolynomial;

  BivariatePolynomial(std::string outer, std::string inner, Polynomial<Inner> grid = {})
      : outer_(std::move(outer)), inner_(std::move(inner)), p_(std::move(grid)) {}

  /// From a sparse polynomial in which at most `outer` and `inner` occur.
  static BivariatePolynomial from_sparse(const SparsePolynomial& s, const std::string& outer,
                                         const std::string& inner) {
    std::size_t io = s.index_of(outer);
    std::size_t ii = s.variables().size();
    for (std::size_t k = 0; k < s.variables().size(); ++k)
      if (s.variables()[k] == inner) ii = k;
    std::vector<std::vector<Rational>> grid;
    for (const auto& [e, c] : s.terms()) {
      for (std::size_t k = 0; k < e.size(); ++k)
        if (k != io && k != ii && e[k] != 0)
          throw InvalidArgument("bivariate: variable '" + s.variables()[k] + "' occurs");
      unsigned eo = e[io], ei = ii < e.size() ? e[ii] : 0;
      if (grid.size() <= eo) grid.resize(eo + 1);
      if (grid[eo].size() <= ei) grid[eo].resize(ei + 1, Rational(0));
      grid[eo][ei] = c;
    }
    std::vector<Inner> coeffs;
    for (auto& row : grid) coeffs.emplace_back(std::move(row));
    return BivariatePolynomial(outer, inner, Polynomial<Inner>(std::move(coeffs)));
  }

  const std::string& outer() const { return outer_; }
  const std::string& inner() const { return inner_; }
  const Polynomial<Inner>& grid() const { return p_; }
  int degree_outer() const { return p_.degree(); }
  bool contains_outer() const { return p_.degree() > 0; }

  /// Substitutes a value for the inner variable.
  RationalPolynomial at_inner(const Rational& v) const {
    std::vector<Rational> out;
    for (const auto& c : p_.coefficients()) out.push_back(c(v));
    return RationalPolynomial(std::move(out));
  }

 private:
  std::string outer_, inner_;
  Polynomial<Inner> p_;
};

/// Res_outer(P, Q) as a polynomial in the shared inner variable.
inline RationalPolynomial bivariate_resultant(const BivariatePolynomial& P,
                                              const BivariatePolynomial& Q) {
  if (P.outer() != Q.outer() || P.inner() != Q.inner())
    throw InvalidArgument("bivariate_resultant: variable names differ");
  if (!P.contains_outer() || !Q.contains_outer())
    throw InvalidArgument("bivariate_resultant: '" + P.outer() + "' does not occur in an input");
  return resultant(P.grid(), Q.grid());
}

}  // namespace g2
