#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strange/numeric.hpp"

namespace strange {

/// Dense univariate polynomial in λ with exact integer coefficients, stored
/// constant term first. Trailing zero coefficients are always trimmed, so the
/// zero polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1);
  /// λ^m − 1.
  static IntPolynomial power_minus_one(std::size_t m);
  /// m-th cyclotomic polynomial Φ_m.
  static IntPolynomial cyclotomic(std::size_t m);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; −1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t i) const;
  BigInt leading() const;

  BigInt evaluate(const BigInt& x) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial pow(unsigned e) const;

  /// Exact division by a monic (or unit-leading) divisor. Returns the quotient
  /// when the remainder vanishes, nothing otherwise.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, highest power first: "l^2 + l + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace strange
