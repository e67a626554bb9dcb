#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "strange/weights.hpp"

namespace strange {

using IntGrid = std::vector<std::vector<std::int64_t>>;

/// A non-negative integer matrix Q with (w)Q = (N,…,N) and Q·w′ = (N′,…,N′)ᵗ.
/// N is the magic degree of the system (N₁ + N₂ for complete intersections).
struct MagicSquare {
  IntGrid entries;
  WeightSystem left;
  WeightSystem right;

  std::string to_string() const;
};

/// Throws ShapeMismatch unless Q is |W| × |W′|.
bool is_magic(const IntGrid& q, const WeightSystem& w, const WeightSystem& w_prime);

/// Square and |det Q| = N = N′.
bool is_primitive(const IntGrid& q, const WeightSystem& w, const WeightSystem& w_prime);

IntGrid transpose(const IntGrid& q);

/// Exact determinant of a square grid; ShapeMismatch otherwise.
BigInt grid_determinant(const IntGrid& q);

/// All q ≥ 0 with Σ w_i q_i = n, lexicographically ordered.
std::vector<std::vector<std::int64_t>> weighted_compositions(const std::vector<std::int64_t>& weights,
                                                             std::int64_t n);

/// Exhaustive search, lexicographic by the row-major flattened matrix. With
/// require_primitive, systems of different degree yield nothing.
std::vector<MagicSquare> find_magic_squares(const WeightSystem& w, const WeightSystem& w_prime,
                                            bool require_primitive);

/// Reduced systems (w′₁ ≤ w′₂ ≤ w′₃; N) admitting a primitive magic square
/// with W, found by solving Q·w′ = N·1 over column triples with |det Q| = N.
std::vector<WeightSystem> enumerate_duals(const WeightSystem& w);

enum class SquareConvention { Square4x4, Rect3x4, Rect4x3 };

std::string_view to_string(SquareConvention c);
/// `square-4x4`, `rect-3x4` or `rect-4x3`; UnsupportedConvention otherwise.
SquareConvention parse_convention(std::string_view text);

/// Squares for a complete-intersection system, with N = N₁ + N₂ on that side.
/// Primitivity is enforced for the square convention only. The shape implied
/// by the convention must match the weight counts (ShapeMismatch).
std::vector<MagicSquare> find_generalized_squares(const WeightSystem& w, const WeightSystem& w_prime,
                                                  SquareConvention convention);

}  // namespace strange
