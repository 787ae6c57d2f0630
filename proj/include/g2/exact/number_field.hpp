#pragma once

#include <concepts>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "g2/errors.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/rational.hpp"

namespace g2 {

/// Element of the quotient ring K[a]/(m(a)), stored as its reduced
/// representative of degree < deg m. The modulus is shared between elements
/// and is normalized to be monic.
///
/// An element without a modulus is a plain element of K. Such "scalars" mix
/// freely with elements of any quotient ring, which lets generic code build
/// constants with `NumberFieldElement<K>(1)`.
///
/// The modulus does not have to be irreducible. Inverting a zero divisor
/// throws ZeroDivisorError carrying the common factor that was found.
template <class K = Rational>
class NumberFieldElement {
 public:
  using base_type = K;
  using Modulus = std::shared_ptr<const Polynomial<K>>;

  NumberFieldElement() = default;
  NumberFieldElement(const K& k) : rep_(k) {}
  template <class R>
    requires(!std::same_as<std::remove_cvref_t<R>, K> &&
             !std::same_as<std::remove_cvref_t<R>, NumberFieldElement> &&
             std::constructible_from<K, const R&>)
  NumberFieldElement(const R& r) : rep_(K(r)) {}

  static Modulus make_modulus(const Polynomial<K>& m) {
    if (m.degree() < 1) throw InvalidArgument("quotient modulus must have positive degree");
    return std::make_shared<const Polynomial<K>>(m.monic());
  }

  /// The class of the indeterminate `a` in K[a]/(m).
  static NumberFieldElement generator(const Modulus& m) {
    return from_representative(m, Polynomial<K>::x());
  }

  static NumberFieldElement from_representative(const Modulus& m, const Polynomial<K>& p) {
    NumberFieldElement e;
    e.m_ = m;
    e.rep_ = m ? p % *m : p;
    if (!m && p.degree() > 0) throw InvalidArgument("representative needs a modulus");
    return e;
  }

  const Modulus& modulus() const { return m_; }
  const Polynomial<K>& representative() const { return rep_; }

  /// Representative coefficients padded to deg m entries (one entry when the
  /// element is a bare scalar).
  std::vector<K> coefficients() const {
    std::size_t n = m_ ? static_cast<std::size_t>(m_->degree()) : 1;
    std::vector<K> out(n, K(0));
    for (std::size_t i = 0; i < rep_.coefficients().size(); ++i) out[i] = rep_[i];
    return out;
  }

  bool is_zero() const { return rep_.is_zero(); }
  bool in_base() const { return rep_.degree() <= 0; }
  std::optional<K> as_base() const {
    if (!in_base()) return std::nullopt;
    return rep_.coeff(0);
  }

  NumberFieldElement inverse() const {
    if (rep_.is_zero()) throw DivisionByZero();
    if (!m_ || rep_.degree() == 0) {
      NumberFieldElement e;
      e.m_ = m_;
      e.rep_ = Polynomial<K>(detail::coeff_inverse(rep_.leading()));
      return e;
    }
    auto eg = extended_gcd(rep_, *m_);
    if (eg.g.degree() > 0) throw ZeroDivisorError(to_string(eg.g, "a"));
    return from_representative(m_, eg.s);
  }

  friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
    NumberFieldElement e;
    e.m_ = common(a, b);
    e.rep_ = a.rep_ + b.rep_;
    return e;
  }
  friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
    NumberFieldElement e;
    e.m_ = common(a, b);
    e.rep_ = a.rep_ - b.rep_;
    return e;
  }
  friend NumberFieldElement operator-(const NumberFieldElement& a) {
    NumberFieldElement e;
    e.m_ = a.m_;
    e.rep_ = -a.rep_;
    return e;
  }
  friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
    NumberFieldElement e;
    e.m_ = common(a, b);
    e.rep_ = a.rep_ * b.rep_;
    if (e.m_ && e.rep_.degree() >= e.m_->degree()) e.rep_ = e.rep_ % *e.m_;
    return e;
  }
  friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
    NumberFieldElement binv = b.inverse();
    return a * binv;
  }
  NumberFieldElement& operator+=(const NumberFieldElement& o) { return *this = *this + o; }
  NumberFieldElement& operator-=(const NumberFieldElement& o) { return *this = *this - o; }
  NumberFieldElement& operator*=(const NumberFieldElement& o) { return *this = *this * o; }
  NumberFieldElement& operator/=(const NumberFieldElement& o) { return *this = *this / o; }

  /// Equality of values. Elements of two different quotient rings compare
  /// only when at least one of them lies in K.
  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
    if (a.m_ && b.m_ && !same_modulus(a.m_, b.m_)) {
      if (a.in_base() || b.in_base()) return a.rep_ == b.rep_;
      throw ModulusMismatch();
    }
    return a.rep_ == b.rep_;
  }

  static bool same_modulus(const Modulus& x, const Modulus& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    return *x == *y;
  }

 private:
  static Modulus common(const NumberFieldElement& a, const NumberFieldElement& b) {
    if (!a.m_) return b.m_;
    if (!b.m_) return a.m_;
    if (!same_modulus(a.m_, b.m_)) throw ModulusMismatch();
    return a.m_;
  }

  Modulus m_;
  Polynomial<K> rep_;
};

template <class K>
bool is_zero(const NumberFieldElement<K>& e) {
  return e.is_zero();
}
template <class K>
NumberFieldElement<K> inverse(const NumberFieldElement<K>& e) {
  return e.inverse();
}
template <class K>
NumberFieldElement<K> exact_quotient(const NumberFieldElement<K>& a, const NumberFieldElement<K>& b) {
  return a / b;
}

/// "1/2 + 3*a (mod a^2 - 3)"; plain scalars print without the modulus.
template <class K>
std::string to_string(const NumberFieldElement<K>& e) {
  if (!e.modulus() || e.in_base()) {
    return e.representative().is_zero() ? "0" : detail::scalar_text(e.representative()[0]);
  }
  return to_string(e.representative(), "a") + " (mod " + to_string(*e.modulus(), "a") + ")";
}

using NumberField = NumberFieldElement<Rational>;

template <class T>
struct is_number_field : std::false_type {};
template <class K>
struct is_number_field<NumberFieldElement<K>> : std::true_type {};

}  // namespace g2
