#pragma once

#include <array>
#include <utility>
#include <vector>

#include "g2/errors.hpp"
#include "g2/exact/number_field.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/resultant.hpp"
#include "g2/genus2/binary_form.hpp"

namespace g2 {

/// Y^2 = f(x) with deg f in {5, 6}. A quintic is read as a sextic with a
/// root at infinity. Smoothness is not enforced here; see is_smooth().
template <class K>
class Genus2Curve {
 public:
  explicit Genus2Curve(Polynomial<K> f) : f_(std::move(f)) {
    if (f_.degree() != 5 && f_.degree() != 6)
      throw InvalidArgument("genus-2 curve needs deg f in {5,6}, got " + std::to_string(f_.degree()));
  }

  const Polynomial<K>& f() const { return f_; }

  /// Coefficients of the binary sextic, c[i] for x^i y^(6-i).
  BinaryForm<K> sextic() const {
    std::vector<K> c(7, K(0));
    for (int i = 0; i <= f_.degree(); ++i) c[static_cast<std::size_t>(i)] = f_[static_cast<std::size_t>(i)];
    return {c};
  }

  bool is_smooth() const { return !is_zero(discriminant(f_)); }

 private:
  Polynomial<K> f_;
};

template <class K>
struct IgusaInvariants {
  K J2, J4, J6, J10;
  friend bool operator==(const IgusaInvariants&, const IgusaInvariants&) = default;
};

template <class K>
struct AbsoluteInvariants {
  K i1, i2, i3;
  friend bool operator==(const AbsoluteInvariants&, const AbsoluteInvariants&) = default;
};

/// Clebsch invariants A, B, C, D of a binary sextic.
template <class K>
std::array<K, 4> clebsch_invariants(const BinaryForm<K>& f) {
  auto i = transvectant(f, f, 4);
  auto delta = transvectant(i, i, 2);
  auto y1 = transvectant(f, i, 4);
  auto y2 = transvectant(i, y1, 2);
  auto y3 = transvectant(i, y2, 2);
  return {transvectant(f, f, 6).scalar(), transvectant(i, i, 4).scalar(),
          transvectant(i, delta, 4).scalar(), transvectant(y3, y1, 2).scalar()};
}

/// Igusa-Clebsch invariants, normalized so that for a sextic with leading
/// coefficient a and roots r_1..r_6
///   J2  = a^2  sum_15 (12)^2(34)^2(56)^2
///   J4  = a^4  sum_10 (12)^2(23)^2(31)^2(45)^2(56)^2(64)^2
///   J6  = a^6  sum_60 (12)^2(23)^2(31)^2(45)^2(56)^2(64)^2(14)^2(25)^2(36)^2
///   J10 = a^10 prod_{i<j} (ij)^2
/// where (ij) = r_i - r_j. Under x -> lambda x, J_{2k} scales by lambda^(6k).
template <class K>
IgusaInvariants<K> igusa_invariants(const Genus2Curve<K>& curve) {
  auto [A, B, C, D] = clebsch_invariants(curve.sextic());
  auto k = [](long v) { return K(Rational(v)); };
  K A2 = A * A, A3 = A2 * A;
  return {
      k(-120) * A,
      k(-720) * A2 + k(6750) * B,
      k(8640) * A3 - k(108000) * A * B + k(202500) * C,
      k(-62208) * A3 * A2 + k(972000) * A3 * B + k(1620000) * A2 * C - k(3037500) * A * B * B -
          k(6075000) * B * C - k(4556250) * D,
  };
}

/// i1 = 144 J4/J2^2, i2 = -1728 (J2 J4 - 3 J6)/J2^3, i3 = 486 J10/J2^5.
template <class K>
AbsoluteInvariants<K> absolute_invariants(const IgusaInvariants<K>& J) {
  if (is_zero(J.J2)) throw CriterionInapplicable("absolute invariants need J2 != 0");
  auto k = [](long v) { return K(Rational(v)); };
  K J2_2 = J.J2 * J.J2, J2_3 = J2_2 * J.J2;
  return {k(144) * J.J4 / J2_2, k(-1728) * (J.J2 * J.J4 - k(3) * J.J6) / J2_3,
          k(486) * J.J10 / (J2_3 * J2_2)};
}

template <class K>
AbsoluteInvariants<K> absolute_invariants(const Genus2Curve<K>& c) {
  return absolute_invariants(igusa_invariants(c));
}

/// Isomorphism over the algebraic closure, decided by absolute invariants.
/// Only valid when J2 != 0 on both curves.
template <class K>
bool is_isomorphic(const Genus2Curve<K>& a, const Genus2Curve<K>& b) {
  return absolute_invariants(a) == absolute_invariants(b);
}

}  // namespace g2
