#pragma once

#include <vector>

#include "g2/errors.hpp"
#include "g2/exact/rational.hpp"

namespace g2 {

/// Binary form sum c[i] x^i y^(n-i) of degree n = c.size() - 1.
template <class K>
struct BinaryForm {
  std::vector<K> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }

  BinaryForm dx() const {
    const int n = degree();
    if (n <= 0) return {{}};
    std::vector<K> out(static_cast<std::size_t>(n), K(0));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = c[static_cast<std::size_t>(i)] * K(i);
    return {out};
  }
  BinaryForm dy() const {
    const int n = degree();
    if (n <= 0) return {{}};
    std::vector<K> out(static_cast<std::size_t>(n), K(0));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] * K(n - i);
    return {out};
  }
  BinaryForm derive(int nx, int ny) const {
    BinaryForm r = *this;
    for (int k = 0; k < nx; ++k) r = r.dx();
    for (int k = 0; k < ny; ++k) r = r.dy();
    return r;
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.c.empty() || b.c.empty()) return {{}};
    std::vector<K> out(a.c.size() + b.c.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
    return {out};
  }
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.c.empty()) return b;
    if (b.c.empty()) return a;
    if (a.c.size() != b.c.size()) throw InvalidArgument("adding binary forms of different degree");
    std::vector<K> out(a.c);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b.c[i];
    return {out};
  }
  friend BinaryForm operator*(const BinaryForm& a, const K& s) {
    std::vector<K> out(a.c);
    for (auto& v : out) v = v * s;
    return {out};
  }

  /// Value of a degree-0 form.
  K scalar() const {
    if (degree() != 0) throw InvalidArgument("binary form is not a constant");
    return c[0];
  }
};

namespace detail {
inline Rational factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return Rational(r);
}
inline Rational binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }
}  // namespace detail

/// Transvectant (f, g)_k, scaled by (m-k)!(n-k)!/(m! n!).
template <class K>
BinaryForm<K> transvectant(const BinaryForm<K>& f, const BinaryForm<K>& g, int k) {
  const int m = f.degree(), n = g.degree();
  if (k > m || k > n) throw InvalidArgument("transvectant order exceeds a form degree");
  BinaryForm<K> sum;
  for (int i = 0; i <= k; ++i) {
    Rational coef = detail::binomial(k, i);
    if (i & 1) coef = -coef;
    sum = sum + f.derive(k - i, i) * g.derive(i, k - i) * K(coef);
  }
  Rational scale = detail::factorial(m - k) * detail::factorial(n - k) /
                   (detail::factorial(m) * detail::factorial(n));
  return sum * K(scale);
}

}  // namespace g2
