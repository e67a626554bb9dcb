#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strange/frame_shape.hpp"
#include "strange/numeric.hpp"
#include "strange/polynomial.hpp"

namespace strange {

/// Dense square-or-rectangular matrix of big integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit IntMatrix(const std::vector<std::vector<std::int64_t>>& rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-() const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The empty matrix has determinant 1.
BigInt determinant(const IntMatrix& m);

/// det(λI − M) by the Faddeev–LeVerrier recursion; every division is exact
/// over the integers.
IntPolynomial characteristic_polynomial(const IntMatrix& m);

/// A symmetric integer bilinear form on a labeled basis.
struct GramLattice {
  IntMatrix gram;
  std::vector<std::string> labels;

  std::size_t rank() const { return gram.rows(); }
};

/// Validates symmetry and label count; throws Malformed.
GramLattice make_lattice(IntMatrix gram, std::vector<std::string> labels);

/// Star-shaped tree: one chain of b_i − 1 vertices per arm, all joined to a
/// central vertex listed last. Self-intersections −2, edges +1.
GramLattice star(const std::vector<std::int64_t>& arms);
GramLattice star3(std::int64_t b1, std::int64_t b2, std::int64_t b3);
GramLattice star4(std::int64_t b1, std::int64_t b2, std::int64_t b3, std::int64_t b4);

/// Dynkin diagram lattice of a simply-laced root system with −2 diagonal:
/// `A<n>`, `D<n>` (n ≥ 4), `E6`, `E7`, `E8`.
GramLattice dynkin(std::string_view symbol);

GramLattice hyperbolic_u();
GramLattice minus_e8();
/// (−E₈)² ⊕ U³, rank 22.
GramLattice k3_lattice();
/// (−E₈)² ⊕ U⁴, rank 24.
GramLattice k24();
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

/// Sum of terms joined by `+`: `star:b1,b2,...`, `U`, `-E8`, `K3`, `K24`,
/// or a Dynkin symbol.
GramLattice parse_lattice_expr(std::string_view text);

BigInt determinant(const GramLattice& lattice);

/// Invariant factors d₁ | d₂ | … (one per basis vector, all positive) of the
/// Gram matrix; DegenerateForm when the determinant vanishes.
std::vector<BigInt> smith_invariants(const GramLattice& lattice);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester inertia by exact rational congruence elimination.
Signature signature(const GramLattice& lattice);

struct LatticeAutomorphismReport {
  IntMatrix matrix;
  IntPolynomial char_poly;
  std::optional<FrameShape> frame;
  std::optional<std::int64_t> order;
};

/// Upper bound on the order searched for a Coxeter element.
inline constexpr std::int64_t kCoxeterOrderBound = 10'000;

/// C = −V⁻¹Vᵗ where gram = V + Vᵗ, V upper triangular with −1 on the diagonal.
IntMatrix coxeter_matrix(const GramLattice& lattice);

/// Coxeter element of the basis in its given order, with its characteristic
/// polynomial, Frame shape (when it is a product of cyclotomic factors) and
/// finite order (when C^k = I for some k within kCoxeterOrderBound).
LatticeAutomorphismReport coxeter_element(const GramLattice& lattice);

/// Splits `A11+D7+E6` or `D6^4` into individual component symbols.
std::vector<std::string> parse_root_system(std::string_view text);

/// Concatenation over the components of the Coxeter-element Frame shapes,
/// each computed from its Dynkin Gram matrix. UnknownSymbol on bad input.
FrameShape coxeter_frame_of_root_system(const std::vector<std::string>& symbols);

}  // namespace strange
