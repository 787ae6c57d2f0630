#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "g2/errors.hpp"
#include "g2/exact/rational.hpp"

namespace g2 {

namespace detail {
template <class K>
bool coeff_is_zero(const K& c) {
  return is_zero(c);
}
template <class K>
K coeff_inverse(const K& c) {
  return inverse(c);
}
}  // namespace detail

/// Dense univariate polynomial over a commutative ring K, coefficients stored
/// low degree first. The coefficient vector never ends in a zero, so the zero
/// polynomial has no coefficients and degree -1.
///
/// K needs: construction from int, +, -, *, ==, and a free `is_zero(const K&)`.
/// Operations that divide (divmod, gcd, monic) additionally need `inverse(K)`.
template <class K>
class Polynomial {
 public:
  using scalar_type = K;

  Polynomial() = default;
  explicit Polynomial(K c) {
    if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static Polynomial x() { return monomial(K(1), 1); }
  static Polynomial monomial(K c, std::size_t k) {
    if (detail::coeff_is_zero(c)) return {};
    std::vector<K> v(k + 1, K(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coefficients() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& operator[](std::size_t i) const { return c_[i]; }
  const K& leading() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * K(static_cast<int>(i)));
    return Polynomial(std::move(d));
  }

  /// Horner evaluation at a point of any ring T that accepts K coefficients.
  template <class T>
  T operator()(const T& at) const {
    if (c_.empty()) return T(0);
    T acc = T(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      acc = acc * at;
      acc = acc + T(c_[i]);
    }
    return acc;
  }

  /// p(g(x))
  Polynomial compose(const Polynomial& g) const {
    Polynomial acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Polynomial(c_[i]);
    return acc;
  }

  Polynomial monic() const {
    if (c_.empty()) return {};
    K inv = inverse(c_.back());
    return *this * inv;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<K> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(K(0) - c);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const K& s) {
    std::vector<K> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(c * s);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const K& s, const Polynomial& a) { return a * s; }
  friend Polynomial operator/(const Polynomial& a, const K& s) { return a * inverse(s); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
bool is_zero(const Polynomial<K>& p) {
  return p.is_zero();
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divmod(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<K>{}, a};
  std::vector<K> r = a.coefficients();
  const int db = b.degree();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - db + 1), K(0));
  const K lead_inv = inverse(b.leading());
  for (int k = a.degree() - db; k >= 0; --k) {
    K t = r[static_cast<std::size_t>(k + db)] * lead_inv;
    if (is_zero(t)) continue;
    q[static_cast<std::size_t>(k)] = t;
    for (int i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(k + i);
      r[idx] = r[idx] - t * b[static_cast<std::size_t>(i)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial<K>(std::move(q)), Polynomial<K>(std::move(r))};
}

template <class K>
Polynomial<K> operator%(const Polynomial<K>& a, const Polynomial<K>& b) {
  return divmod(a, b).second;
}

template <class K>
bool divides(const Polynomial<K>& d, const Polynomial<K>& p) {
  return divmod(p, d).second.is_zero();
}

/// Quotient a/b when b divides a exactly over an integral domain.
/// Over a field this is plain division; over K = Polynomial<F> the leading
/// coefficients are divided exactly as well.
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

template <class K>
Polynomial<K> exact_quotient(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InvalidArgument("exact_quotient: inexact division");
  std::vector<K> r = a.coefficients();
  const int db = b.degree();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - db + 1), K(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    const K& top = r[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    K t = exact_quotient(top, b.leading());
    for (int i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(k + i);
      r[idx] = r[idx] - t * b[static_cast<std::size_t>(i)];
    }
    q[static_cast<std::size_t>(k)] = std::move(t);
  }
  for (int i = 0; i < db; ++i)
    if (!is_zero(r[static_cast<std::size_t>(i)]))
      throw InvalidArgument("exact_quotient: inexact division");
  return Polynomial<K>(std::move(q));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r. No division in K.
template <class K>
Polynomial<K> pseudo_remainder(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  int e = a.degree() - b.degree() + 1;
  Polynomial<K> r = a;
  const K& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    Polynomial<K> t = Polynomial<K>::monomial(r.leading(), shift);
    r = r * lb - t * b;
    --e;
  }
  K scale(1);
  for (int i = 0; i < e; ++i) scale = scale * lb;
  return r * scale;
}

template <class K>
Polynomial<K> pow(const Polynomial<K>& p, unsigned e) {
  Polynomial<K> result(K(1)), base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    Polynomial<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
struct ExtendedGcd {
  Polynomial<K> g, s, t;
};

template <class K>
ExtendedGcd<K> extended_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
  Polynomial<K> r0 = a, r1 = b;
  Polynomial<K> s0(K(1)), s1, t0, t1(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = inverse(r0.leading());
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace detail {
inline std::string scalar_text(const Rational& r) { return r.to_string(); }
template <class K>
std::string scalar_text(const K& k) {
  return "(" + to_string(k) + ")";
}
}  // namespace detail

/// Human readable form, highest degree first, e.g. "x^3 - 3/2*x^2 + 1".
template <class K>
std::string to_string(const Polynomial<K>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const K& c = p[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    std::string cs = detail::scalar_text(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (negative) cs.erase(0, 1);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

using RationalPolynomial = Polynomial<Rational>;

}  // namespace g2
