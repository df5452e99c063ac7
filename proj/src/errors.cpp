#include "ecc/errors.hpp"

namespace ecc {

const char* err_name(Err e) {
  switch (e) {
    case Err::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::UnsupportedOrder: return "UnsupportedOrder";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::SolutionSpaceTooLarge: return "SolutionSpaceTooLarge";
    case Err::ThresholdTooLow: return "ThresholdTooLow";
    case Err::InternalContradiction: return "InternalContradiction";
    case Err::InvalidFoldParams: return "InvalidFoldParams";
    case Err::InvalidRate: return "InvalidRate";
    case Err::InequalityViolated: return "InequalityViolated";
    case Err::BudgetShape: return "BudgetShape";
    case Err::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace ecc
