#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "g2/errors.hpp"
#include "g2/exact/polynomial.hpp"

namespace g2 {

template <class K>
struct SquarefreeFactor {
  Polynomial<K> factor;  // monic, squarefree, pairwise coprime
  int multiplicity;
};

/// Yun's algorithm (characteristic 0): p = lc * prod factor_i^i.
template <class K>
std::vector<SquarefreeFactor<K>> squarefree_decomposition(const Polynomial<K>& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor<K>> out;
  if (p.degree() == 0) return out;
  Polynomial<K> dp = p.derivative();
  Polynomial<K> a = gcd(p, dp);
  Polynomial<K> b = divmod(p, a).first;
  Polynomial<K> c = divmod(dp, a).first;
  Polynomial<K> d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& p) {
  Polynomial<K> r(K(1));
  for (const auto& f : squarefree_decomposition(p)) r = r * f.factor;
  return r;
}

/// Root multiplicities over the algebraic closure, largest first.
template <class K>
std::vector<int> multiplicity_profile(const Polynomial<K>& p) {
  std::vector<int> out;
  for (const auto& f : squarefree_decomposition(p))
    out.insert(out.end(), static_cast<std::size_t>(f.factor.degree()), f.multiplicity);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace g2
