#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strange {

/// Failure categories raised by the library. Each maps to one named error
/// condition of an operation; callers switch on `code()` rather than parsing
/// messages.
enum class ErrorCode {
  Malformed,
  EmptyShape,
  NonPolynomial,
  NotCyclotomicProduct,
  PoleAtOne,
  NonIntegerMilnorNumber,
  NonIntegralExponent,
  DegenerateWeightSystem,
  WrongClass,
  DegenerateForm,
  DiagonalNotMinusTwo,
  UnknownSymbol,
  UnknownName,
  NoFormula,
  ShapeMismatch,
  UnsupportedConvention,
  DomainError,
  NonPositiveD,
  InvalidCatalog,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strange
