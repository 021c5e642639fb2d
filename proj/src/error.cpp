#include "qhcurve/error.hpp"

namespace qhcurve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NonUnitConstant: return "NonUnitConstant";
    case ErrorKind::CompositionUndefined: return "CompositionUndefined";
    case ErrorKind::ReversionUndefined: return "ReversionUndefined";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonPositiveValuation: return "NonPositiveValuation";
    case ErrorKind::RegularRing: return "RegularRing";
    case ErrorKind::PrecisionCapExceeded: return "PrecisionCapExceeded";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::CriterionNotMet: return "CriterionNotMet";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::ConstantTermInGenerator: return "ConstantTermInGenerator";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

SyntaxError::SyntaxError(ErrorKind kind, const std::string& message, int line, int column)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

}  // namespace qhcurve
