#pragma once

#include <array>
#include <optional>
#include <variant>

#include "g2/errors.hpp"
#include "g2/exact/rational.hpp"

namespace g2 {

/// Point of the projective line: a finite value or infinity.
template <class K>
struct ProjectivePoint {
  std::optional<K> value;

  ProjectivePoint() = default;
  ProjectivePoint(const K& v) : value(v) {}
  template <class R>
    requires(!std::same_as<std::remove_cvref_t<R>, K> &&
             !std::same_as<std::remove_cvref_t<R>, ProjectivePoint> &&
             std::constructible_from<K, const R&>)
  ProjectivePoint(const R& v) : value(K(v)) {}
  static ProjectivePoint infinity() { return {}; }
  bool is_infinity() const { return !value.has_value(); }
};

template <class K>
struct Legendre {
  K t;  // y^2 = z(z-1)(z-t)
};
template <class K>
struct BranchPoints {
  std::array<ProjectivePoint<K>, 4> q;  // y^2 = prod over finite q_i of (z - q_i)
};
template <class K>
struct ShortWeierstrass {
  K a, b;  // y^2 = x^3 + a x + b
};

template <class K>
using EllipticModel = std::variant<Legendre<K>, BranchPoints<K>, ShortWeierstrass<K>>;

/// 256 (t^2 - t + 1)^3 / (t^2 (t - 1)^2)
template <class K>
K j_from_lambda(const K& t) {
  const K one(Rational(1));
  if (is_zero(t) || is_zero(t - one))
    throw DegenerateParameter("t", "Legendre parameter t in {0, 1}");
  K u = t * t - t + one;
  K v = t * (t - one);
  return K(Rational(256)) * u * u * u / (v * v);
}

/// lambda = (q3-q1)(q2-q4) / ((q2-q1)(q3-q4)), with the factors containing
/// an infinite point dropped.
template <class K>
K cross_ratio(const std::array<ProjectivePoint<K>, 4>& q) {
  int inf = -1;
  for (int i = 0; i < 4; ++i) {
    if (!q[static_cast<std::size_t>(i)].is_infinity()) continue;
    if (inf >= 0) throw InvalidArgument("coincident branch points (two at infinity)");
    inf = i;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const auto &a = q[static_cast<std::size_t>(i)], &b = q[static_cast<std::size_t>(j)];
      if (!a.is_infinity() && !b.is_infinity() && is_zero(*a.value - *b.value))
        throw InvalidArgument("coincident branch points");
    }
  auto d = [&](int i, int j) -> std::optional<K> {
    if (i == inf || j == inf) return std::nullopt;
    return *q[static_cast<std::size_t>(i)].value - *q[static_cast<std::size_t>(j)].value;
  };
  K num(Rational(1)), den(Rational(1));
  for (auto f : {d(2, 0), d(1, 3)})
    if (f) num = num * *f;
  for (auto f : {d(1, 0), d(2, 3)})
    if (f) den = den * *f;
  return num / den;
}

template <class K>
K j_from_branch_points(const std::array<ProjectivePoint<K>, 4>& q) {
  return j_from_lambda(cross_ratio(q));
}

/// 1728 * 4a^3 / (4a^3 + 27b^2)
template <class K>
K j_from_short_weierstrass(const K& a, const K& b) {
  K a3 = K(Rational(4)) * a * a * a;
  K disc = a3 + K(Rational(27)) * b * b;
  if (is_zero(disc)) throw DegenerateParameter("4a^3+27b^2", "singular Weierstrass model");
  return K(Rational(1728)) * a3 / disc;
}

template <class K>
K j_invariant(const EllipticModel<K>& m) {
  return std::visit(
      [](const auto& model) -> K {
        using M = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<M, Legendre<K>>) return j_from_lambda(model.t);
        else if constexpr (std::is_same_v<M, BranchPoints<K>>) return j_from_branch_points(model.q);
        else return j_from_short_weierstrass(model.a, model.b);
      },
      m);
}

}  // namespace g2
