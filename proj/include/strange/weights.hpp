#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "strange/frame_shape.hpp"
#include "strange/numeric.hpp"

namespace strange {

struct SingularityRecord;

/// Weights (w₁,…,w_k), k ∈ {3,4}, with one degree N (hypersurface) or two
/// degrees N₁, N₂ (complete intersection).
struct WeightSystem {
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> degrees;

  bool is_hypersurface() const { return degrees.size() == 1; }
  bool is_reduced() const;
  /// Every degree lies in the numerical semigroup ℕw₁ + … + ℕw_k.
  bool degrees_representable() const;
  /// N for a hypersurface, N₁ + N₂ for a complete intersection; the degree used
  /// by weighted magic squares.
  std::int64_t magic_degree() const;

  /// `w1,w2,w3;N` or `w1,w2,w3,w4;N1,N2`.
  std::string to_string() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;
};

WeightSystem parse_weight_system(std::string_view text);

/// Coin-problem check: is n a non-negative integer combination of the weights?
bool representable(std::int64_t n, const std::vector<std::int64_t>& weights);

/// μ = ∏ (N − w_i) / w_i for a three-variable hypersurface.
std::int64_t milnor_number(const WeightSystem& w);

/// Monodromy Frame shape of a weighted homogeneous hypersurface via the
/// Milnor–Orlik divisor ∏ (u_i⁻¹ Λ_{v_i} − Λ₁), w_i/N = u_i/v_i, with
/// Λ_a·Λ_b = gcd(a,b)·Λ_{lcm(a,b)}. The order is N.
FrameShape monodromy_frame(const WeightSystem& w);

/// N for hypersurfaces, N₂ for complete intersections.
std::int64_t monodromy_order(const SingularityRecord& record);

/// lcm(N₁, N₂) for the triangle ICIS; WrongClass otherwise.
std::int64_t virtual_dual_order(const SingularityRecord& record);

}  // namespace strange
