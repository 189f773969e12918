#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unicomm {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  NoBuiltinModulus,
  FieldTooLarge,
  FieldTooSmall,
  FieldMismatch,
  DivisionByZero,
  SizeMismatch,
  Singular,
  NotUnipotent,
  ScalarInput,
  SpectrumMismatch,
  DeterminantMismatch,
  ConstructionFailed,
  NotU2,
  NotASquare,
  DegenerateValue,
  PreconditionViolated,
  UnsupportedField,
  UnsupportedFieldSize,
  NotSL2,
  NotSLn,
  OutsideDerivedSubgroup,
  BudgetExceeded,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unicomm
