#pragma once

#include <utility>

#include "g2/errors.hpp"
#include "g2/exact/polynomial.hpp"

namespace g2 {

template <class K>
K power(const K& base, unsigned e) {
  K result(1), b = base;
  while (e) {
    if (e & 1u) result = result * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return result;
}

/// Resultant over an integral domain K (needs exact_quotient on K), computed
/// with the subresultant remainder sequence so coefficient growth stays
/// polynomial. Convention: the Sylvester determinant, i.e.
/// res(p, q) = lc(p)^deg q * lc(q)^deg p * prod (alpha_i - beta_j),
/// so res(x - 2, x - 3) = -1.
template <class K>
K resultant(Polynomial<K> a, Polynomial<K> b) {
  if (a.is_zero() || b.is_zero()) return K(0);
  int s = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    K r = power(b.leading(), static_cast<unsigned>(a.degree()));
    return s < 0 ? K(0) - r : r;
  }
  K g(1), h(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    Polynomial<K> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return K(0);
    K div = g * power(h, static_cast<unsigned>(delta));
    std::vector<K> rc = r.coefficients();
    for (auto& c : rc) c = exact_quotient(c, div);
    b = Polynomial<K>(std::move(rc));
    g = a.leading();
    // h <- g^delta / h^(delta-1)
    if (delta > 0)
      h = exact_quotient(power(g, static_cast<unsigned>(delta)),
                       power(h, static_cast<unsigned>(delta - 1)));
    if (b.degree() == 0) break;
  }
  // h <- lc(b)^deg a / h^(deg a - 1)
  const int da = a.degree();
  K out = exact_quotient(power(b.leading(), static_cast<unsigned>(da)),
                         power(h, static_cast<unsigned>(da - 1)));
  return s < 0 ? K(0) - out : out;
}

/// disc(p) = (-1)^(n(n-1)/2) res(p, p') / lc(p).
template <class K>
K discriminant(const Polynomial<K>& p) {
  if (p.degree() < 1) throw InvalidArgument("discriminant needs positive degree");
  if (p.degree() == 1) return K(1);
  const int n = p.degree();
  K r = exact_quotient(resultant(p, p.derivative()), p.leading());
  return ((n * (n - 1) / 2) & 1) ? K(0) - r : r;
}

}  // namespace g2
