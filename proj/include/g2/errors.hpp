#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

/// Base of every error the library throws. `kind()` is the stable tag used
/// when errors are serialized by the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse_error"; }
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
  const char* kind() const noexcept override { return "division_by_zero"; }
};

/// Raised when an element of a quotient ring K[x]/(m) has no inverse because
/// its representative shares the factor `factor` with a reducible modulus.
class ZeroDivisorError : public Error {
 public:
  explicit ZeroDivisorError(std::string factor)
      : Error("element is a zero divisor; common factor with modulus: " + factor),
        factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }
  const char* kind() const noexcept override { return "zero_divisor"; }

 private:
  std::string factor_;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("operands live in different quotient rings") {}
  const char* kind() const noexcept override { return "modulus_mismatch"; }
};

/// Bad argument shape: wrong degree, missing variable, n < 3 and so on.
class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_argument"; }
};

/// A family parameter hits a degenerate locus. `quantity` names what vanished
/// (or collided), `expression` is the formula it came from.
class DegenerateParameter : public Error {
 public:
  DegenerateParameter(std::string quantity, std::string expression)
      : Error(quantity + " degenerate (" + expression + ")"),
        quantity_(std::move(quantity)),
        expression_(std::move(expression)) {}
  const std::string& quantity() const noexcept { return quantity_; }
  const std::string& expression() const noexcept { return expression_; }
  const char* kind() const noexcept override { return "degenerate"; }

 private:
  std::string quantity_;
  std::string expression_;
};

/// The absolute-invariant isomorphism test only applies when J2 != 0.
class CriterionInapplicable : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "criterion_inapplicable"; }
};

}  // namespace g2
