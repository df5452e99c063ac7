#pragma once

#include <stdexcept>
#include <string>

namespace ecc {

enum class Err {
  NonPrimeCharacteristic,
  ReducibleModulus,
  UnsupportedOrder,
  DivisionByZero,
  FieldMismatch,
  ZeroPolynomial,
  LengthMismatch,
  DimensionMismatch,
  SolutionSpaceTooLarge,
  ThresholdTooLow,
  InternalContradiction,
  InvalidFoldParams,
  InvalidRate,
  InequalityViolated,
  BudgetShape,
  SearchSpaceTooLarge,
  InvalidArgument,
  ParseError,
};

const char* err_name(Err e);

/// Library-wide exception; what() starts with the error name so CLI
/// diagnostics identify the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& detail)
      : std::runtime_error(std::string(err_name(code)) + ": " + detail), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace ecc
