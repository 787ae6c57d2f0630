#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "g2/errors.hpp"

namespace g2 {

using Integer = mpz_class;

/// Arbitrary precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(Integer(std::to_string(v))) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "p/q", "-p/q" (decimal integers, optional surrounding space).
  static Rational parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (ch != ' ' && ch != '\t' && ch != '\n') s.push_back(ch);
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    auto check_int = [&](std::string_view part) {
      std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
      if (i == part.size()) throw ParseError("malformed rational: " + s);
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') throw ParseError("malformed rational: " + s);
    };
    auto to_int = [](std::string part) {
      if (!part.empty() && part[0] == '+') part.erase(0, 1);
      return Integer(part, 10);
    };
    if (slash == std::string::npos) {
      check_int(s);
      return Rational(to_int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d = to_int(den);
    if (d == 0) throw ParseError("zero denominator: " + s);
    return Rational(to_int(num), d);
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r;
    r.v_ = mpq_class(n, d);  // already reduced
    return r;
  }

  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational inverse(const Rational& r) { return r.inverse(); }
inline std::string to_string(const Rational& r) { return r.to_string(); }

/// Floor of a rational as an Integer.
inline Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return q;
}

/// Exact square root if `r` is the square of a rational.
inline bool rational_sqrt(const Rational& r, Rational& out) {
  if (r.sign() < 0) return false;
  Integer n = r.numerator(), d = r.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  out = Rational(sn, sd);
  return true;
}

namespace literals {
inline Rational operator""_q(const char* s, std::size_t n) {
  return Rational::parse(std::string_view(s, n));
}
}  // namespace literals

}  // namespace g2

template <>
struct std::hash<g2::Rational> {
  std::size_t operator()(const g2::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
