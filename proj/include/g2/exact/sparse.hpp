#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "g2/errors.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/rational.hpp"

namespace g2 {

/// Sparse multivariate polynomial with rational coefficients over a fixed,
/// ordered list of named variables. Used to carry long closed-form formulas
/// that are written down as text and parsed once.
class SparsePolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static SparsePolynomial constant(std::vector<std::string> vars, const Rational& c) {
    SparsePolynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
  }
  static SparsePolynomial variable(std::vector<std::string> vars, const std::string& name) {
    SparsePolynomial p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.terms_[e] = Rational(1);
    return p;
  }

  /// Grammar: sums and differences of products; factors are integers,
  /// variable names, parenthesized expressions, each optionally raised to a
  /// nonnegative integer power with '^'. '/' is allowed only by a constant.
  static SparsePolynomial parse(std::string_view text, std::vector<std::string> vars);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
  }
  Rational constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw InvalidArgument("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  unsigned degree_in(const std::string& name) const {
    std::size_t i = index_of(name);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  /// Value at a point given in variable order. T must be constructible from
  /// Rational and closed under + and *.
  template <class T>
  T evaluate(const std::vector<T>& at) const {
    if (at.size() != vars_.size()) throw InvalidArgument("evaluate: wrong number of values");
    std::vector<std::vector<T>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned top = 0;
      for (const auto& [e, c] : terms_) top = std::max(top, e[i]);
      powers[i].reserve(top + 1);
      powers[i].push_back(T(Rational(1)));
      for (unsigned k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * at[i]);
    }
    T acc = T(Rational(0));
    for (const auto& [e, c] : terms_) {
      T term = T(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) term = term * powers[i][e[i]];
      acc = acc + term;
    }
    return acc;
  }

  /// Collects the polynomial in `var`, substituting the remaining variables
  /// (given in variable order; the entry for `var` itself is ignored).
  template <class T>
  Polynomial<T> univariate(const std::string& var, std::vector<T> at) const {
    std::size_t v = index_of(var);
    std::map<unsigned, SparsePolynomial> by_power;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      rest[v] = 0;
      auto [it, fresh] = by_power.try_emplace(e[v], SparsePolynomial(vars_));
      it->second.terms_[rest] = c;
    }
    at.resize(vars_.size(), T(Rational(0)));
    at[v] = T(Rational(0));
    std::vector<T> coeffs(by_power.empty() ? 0 : by_power.rbegin()->first + 1, T(Rational(0)));
    for (const auto& [k, part] : by_power) coeffs[k] = part.evaluate(at);
    return Polynomial<T>(std::move(coeffs));
  }

  /// Univariate polynomial when `var` is the only variable that occurs.
  RationalPolynomial as_univariate(const std::string& var) const {
    std::size_t v = index_of(var);
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != v && e[i] != 0) throw InvalidArgument("as_univariate: other variables occur");
      if (coeffs.size() <= e[v]) coeffs.resize(e[v] + 1, Rational(0));
      coeffs[e[v]] = c;
    }
    return RationalPolynomial(std::move(coeffs));
  }

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r = a;
    r.require_same(b);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend SparsePolynomial operator-(const SparsePolynomial& a) {
    SparsePolynomial r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a + (-b);
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.require_same(b);
    SparsePolynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const Rational& s) {
    SparsePolynomial r(a.vars_);
    if (s.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  SparsePolynomial pow(unsigned e) const {
    SparsePolynomial r = constant(vars_, Rational(1)), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return r;
  }

 private:
  void require_same(const SparsePolynomial& o) const {
    if (vars_ != o.vars_) throw InvalidArgument("sparse polynomials over different variables");
  }
  void add_term(const Exponents& e, const Rational& c) {
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
      terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

namespace detail {

class SparseParser {
 public:
  SparseParser(std::string_view text, std::vector<std::string> vars)
      : s_(text), vars_(std::move(vars)) {}

  SparsePolynomial run() {
    SparsePolynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePolynomial expr() {
    SparsePolynomial acc;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        return acc;
      }
      SparsePolynomial t = term();
      if (sign < 0) t = -t;
      acc = first ? t : acc + t;
      first = false;
    }
  }

  SparsePolynomial term() {
    SparsePolynomial acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        SparsePolynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc * d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  SparsePolynomial power() {
    SparsePolynomial base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  SparsePolynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      SparsePolynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (ch == '-' || ch == '+') {
      ++pos_;
      SparsePolynomial inner = power();
      return ch == '-' ? -inner : inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return SparsePolynomial::constant(vars_, Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return SparsePolynomial::variable(vars_, std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

}  // namespace detail

inline SparsePolynomial SparsePolynomial::parse(std::string_view text,
                                                std::vector<std::string> vars) {
  return detail::SparseParser(text, std::move(vars)).run();
}

}  // namespace g2
