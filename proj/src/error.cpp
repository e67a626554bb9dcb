#include "strange/error.hpp"

#include <numeric>

#include "strange/numeric.hpp"

namespace strange {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::EmptyShape: return "EmptyShape";
    case ErrorCode::NonPolynomial: return "NonPolynomial";
    case ErrorCode::NotCyclotomicProduct: return "NotCyclotomicProduct";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::NonIntegerMilnorNumber: return "NonIntegerMilnorNumber";
    case ErrorCode::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorCode::DegenerateWeightSystem: return "DegenerateWeightSystem";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::DiagonalNotMinusTwo: return "DiagonalNotMinusTwo";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NoFormula: return "NoFormula";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnsupportedConvention: return "UnsupportedConvention";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonPositiveD: return "NonPositiveD";
    case ErrorCode::InvalidCatalog: return "InvalidCatalog";
  }
  return "Unknown";
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

}  // namespace strange
