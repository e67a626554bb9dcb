#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "strange/numeric.hpp"
#include "strange/polynomial.hpp"

namespace strange {

/// A Frame shape ∏ m^{χ_m}, i.e. the symbol of the characteristic polynomial
/// ∏ (λ^m − 1)^{χ_m}, together with the order h of the operator it describes.
///
/// Canonical form: no zero exponents, keys ascending (std::map), every key
/// divides h. Two shapes are equal iff they have equal exponent maps and equal
/// orders. The empty shape (degree 0, order 1) is the concatenation identity.
class FrameShape {
 public:
  using Exponents = std::map<std::int64_t, std::int64_t>;

  FrameShape() = default;
  /// Order defaults to the largest key.
  explicit FrameShape(Exponents exponents);
  FrameShape(Exponents exponents, std::int64_t order);

  static FrameShape empty() { return {}; }

  const Exponents& exponents() const { return exps_; }
  std::int64_t order() const { return order_; }
  bool is_empty() const { return exps_.empty(); }

  /// χ_m, zero when m is not a key.
  std::int64_t exponent(std::int64_t m) const;
  std::int64_t max_key() const { return exps_.empty() ? 1 : exps_.rbegin()->first; }

  /// Canonical text: ascending keys, `^1` omitted, `@h` only when h differs
  /// from the largest key.
  std::string to_string() const;

  friend bool operator==(const FrameShape&, const FrameShape&) = default;
  friend auto operator<=>(const FrameShape&, const FrameShape&) = default;

 private:
  Exponents exps_;
  std::int64_t order_ = 1;
};

/// Parses `prod ['/' prod] ['@' h]` with `prod := term ('*' term)*` and
/// `term := m ['^' e]`. Exponents may be written as 0 (so `1^0/1^2` can spell
/// a shape with no positive part); a shape that cancels to nothing is an
/// EmptyShape error.
FrameShape parse_frame(std::string_view text);

/// Σ m·χ_m.
BigInt degree(const FrameShape& pi);

/// ∏ (λ^m − 1)^{χ_m}; throws NonPolynomial when the division is not exact.
IntPolynomial to_char_poly(const FrameShape& pi);

/// Multiplicities e_d of Φ_d in φ for every cyclotomic factor. Throws
/// NotCyclotomicProduct when φ is not (monic) a product of cyclotomic
/// polynomials.
std::map<std::int64_t, std::int64_t> cyclotomic_multiplicities(const IntPolynomial& phi);

/// Inverse of to_char_poly for an operator of order h: χ_m is extracted for
/// the divisors m of h in decreasing order.
FrameShape from_char_poly(const IntPolynomial& phi, std::int64_t h);

/// χ*_k = −χ_{h/k} for k | h, same order h.
FrameShape saito_dual(const FrameShape& pi);

/// Exponentwise sum; order is the lcm of the orders.
FrameShape concatenate(const FrameShape& a, const FrameShape& b);

/// tr c^k = Σ_{m | k} m·χ_m.
BigInt trace_power(const FrameShape& pi, std::int64_t k);

/// φ(1) as an exact rational: 0 if λ = 1 is a root, ∏ m^{χ_m} when the
/// multiplicity of λ − 1 cancels. Throws PoleAtOne otherwise.
Rational value_at_one(const FrameShape& pi);

/// ∏ m^{χ_m} regardless of the balance of exponents.
Rational product_of_keys(const FrameShape& pi);

bool is_self_dual(const FrameShape& pi);

}  // namespace strange
