#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2/elliptic/j_invariant.hpp"
#include "g2/errors.hpp"
#include "g2/exact/number_field.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/rational.hpp"
#include "g2/exact/sparse.hpp"
#include "g2/genus2/igusa.hpp"
#include "g2/ramification/profile.hpp"

namespace g2 {

using json = nlohmann::json;

// Rationals travel as "p/q" (or "p"); elements of K[a]/(m) as
// {"min_poly": [...], "coeffs": [...]} with coefficient lists low degree first.
// Elements that lie in K are written as plain K values.
// Towers nest: the entries of an extension over an extension are themselves records.

inline json encode(const Rational& r) { return r.to_string(); }

template <class K>
json encode(const NumberFieldElement<K>& e) {
  if (!e.modulus() || e.in_base()) return encode(e.representative().coeff(0));
  json mp = json::array(), co = json::array();
  for (const auto& c : e.modulus()->coefficients()) mp.push_back(encode(c));
  for (const auto& c : e.coefficients()) co.push_back(encode(c));
  return {{"min_poly", mp}, {"coeffs", co}};
}

template <class K>
json encode(const Polynomial<K>& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(encode(c));
  return out;
}

template <class K>
json encode(const ProjectivePoint<K>& p) {
  return p.is_infinity() ? json("inf") : encode(*p.value);
}

template <class K>
json encode(const IgusaInvariants<K>& J) {
  return {{"J2", encode(J.J2)}, {"J4", encode(J.J4)}, {"J6", encode(J.J6)}, {"J10", encode(J.J10)}};
}

template <class K>
json encode(const AbsoluteInvariants<K>& a) {
  return {{"i1", encode(a.i1)}, {"i2", encode(a.i2)}, {"i3", encode(a.i3)}};
}

inline json encode(const RamificationProfile& p) {
  return {{"degree", p.degree}, {"fibers", p.fibers}, {"text", to_string(p)}};
}

template <class T>
struct Decoder;

template <class T>
T decode(const json& j) {
  return Decoder<T>::run(j);
}

template <>
struct Decoder<Rational> {
  static Rational run(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected a rational string \"p/q\"");
  }
};

template <class K>
struct Decoder<Polynomial<K>> {
  static Polynomial<K> run(const json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient list");
    std::vector<K> c;
    for (const auto& e : j) c.push_back(decode<K>(e));
    return Polynomial<K>(std::move(c));
  }
};

template <class K>
struct Decoder<NumberFieldElement<K>> {
  static NumberFieldElement<K> run(const json& j) {
    using E = NumberFieldElement<K>;
    if (!j.is_object()) return E(decode<K>(j));
    if (!j.contains("min_poly") || !j.contains("coeffs"))
      throw ParseError("number field record needs min_poly and coeffs");
    auto m = decode<Polynomial<K>>(j.at("min_poly"));
    if (m.degree() < 1 || !(m.leading() == K(Rational(1))))
      throw ParseError("min_poly must be monic of positive degree");
    return E::from_representative(E::make_modulus(m), decode<Polynomial<K>>(j.at("coeffs")));
  }
};

template <class K>
struct Decoder<ProjectivePoint<K>> {
  static ProjectivePoint<K> run(const json& j) {
    if (j.is_string()) {
      auto s = j.get<std::string>();
      if (s == "inf" || s == "infinity" || s == "oo") return ProjectivePoint<K>::infinity();
    }
    return ProjectivePoint<K>(decode<K>(j));
  }
};

/// A univariate rational polynomial from a coefficient list (low degree
/// first) or from text in the variable x.
inline RationalPolynomial decode_polynomial(const json& j) {
  if (j.is_array()) return decode<RationalPolynomial>(j);
  if (j.is_string()) return SparsePolynomial::parse(j.get<std::string>(), {"x"}).as_univariate("x");
  throw ParseError("expected a coefficient list or a polynomial in x");
}

}  // namespace g2
