#pragma once

#include <complex>

#include "strange/frame_shape.hpp"

namespace strange {

/// A point τ of the upper half plane, kept away from the real axis so that
/// the q-product converges in a few thousand terms.
class UpperHalfPoint {
 public:
  static constexpr double kMinImag = 0.01;

  /// DomainError if im < kMinImag or either part is not finite.
  UpperHalfPoint(double re, double im);
  explicit UpperHalfPoint(std::complex<double> tau) : UpperHalfPoint(tau.real(), tau.imag()) {}

  double re() const { return tau_.real(); }
  double im() const { return tau_.imag(); }
  std::complex<double> value() const { return tau_; }

 private:
  std::complex<double> tau_;
};

/// η(τ) = q^{1/24} ∏ (1 − qⁿ), q = e^{2πiτ}, truncated once |q|ⁿ < 1e-18.
std::complex<double> eta(const UpperHalfPoint& tau);

/// η via the pentagonal-number series q^{1/24} Σ (−1)^k q^{k(3k−1)/2}; an
/// independent route used for consistency checks.
std::complex<double> eta_pentagonal(const UpperHalfPoint& tau);

/// η_π(τ) = ∏ η(mτ)^{χ_m}.
std::complex<double> eta_product(const FrameShape& pi, const UpperHalfPoint& tau);

/// |η_π(−1/(Nτ))·η_{π*}(τ)·√d − 1| with N the order of π and d = ∏ m^{χ_m}.
/// NonPositiveD when d ≤ 0; DomainError when −1/(Nτ) is too close to the
/// real axis.
double saito_identity_residual(const FrameShape& pi, const UpperHalfPoint& tau);

}  // namespace strange
