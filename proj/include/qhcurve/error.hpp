#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhcurve {

enum class ErrorKind {
  // series
  NotAUnit,
  NonUnitConstant,
  CompositionUndefined,
  ReversionUndefined,
  // ring
  EmptyInput,
  NonPositiveValuation,
  RegularRing,
  PrecisionCapExceeded,
  InsufficientPrecision,
  // ideal
  NotIntegral,
  // quasihom
  CriterionNotMet,
  VerificationFailed,
  InternalConsistency,
  // parser
  SyntaxError,
  ZeroGenerator,
  ConstantTermInGenerator,
  ZeroDenominator,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qhcurve
