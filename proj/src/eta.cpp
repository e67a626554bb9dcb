#include "strange/eta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "strange/error.hpp"

namespace strange {

namespace {

constexpr double kTruncation = 1e-18;

std::complex<double> nome(std::complex<double> tau) {
  return std::exp(2.0 * std::numbers::pi * std::complex<double>(0, 1) * tau);
}

std::complex<double> q24(std::complex<double> tau) {
  return std::exp(2.0 * std::numbers::pi * std::complex<double>(0, 1) * tau / 24.0);
}

}  // namespace

UpperHalfPoint::UpperHalfPoint(double re, double im) : tau_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im) || im < kMinImag) {
    std::ostringstream os;
    os << "tau = " << re << (im < 0 ? "" : "+") << im << "i is below the guard Im(tau) >= " << kMinImag;
    throw Error(ErrorCode::DomainError, os.str());
  }
}

std::complex<double> eta(const UpperHalfPoint& tau) {
  const auto q = nome(tau.value());
  const double aq = std::abs(q);
  std::complex<double> prod = 1.0;
  std::complex<double> qn = q;
  double mag = aq;
  while (mag >= kTruncation) {
    prod *= 1.0 - qn;
    qn *= q;
    mag *= aq;
  }
  return q24(tau.value()) * prod;
}

std::complex<double> eta_pentagonal(const UpperHalfPoint& tau) {
  const auto t = tau.value();
  const double im = tau.im();
  std::complex<double> sum = 1.0;
  for (long k = 1;; ++k) {
    // Exponents k(3k−1)/2 and k(3k+1)/2.
    const double e1 = k * (3.0 * k - 1) / 2.0;
    const double e2 = k * (3.0 * k + 1) / 2.0;
    if (std::exp(-2.0 * std::numbers::pi * im * e1) < kTruncation) break;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (nome(t * e1) + nome(t * e2));
  }
  return q24(t) * sum;
}

std::complex<double> eta_product(const FrameShape& pi, const UpperHalfPoint& tau) {
  std::complex<double> out = 1.0;
  for (const auto& [m, chi] : pi.exponents()) {
    UpperHalfPoint mt(tau.value() * static_cast<double>(m));
    out *= std::pow(eta(mt), static_cast<int>(chi));
  }
  return out;
}

double saito_identity_residual(const FrameShape& pi, const UpperHalfPoint& tau) {
  const Rational d = product_of_keys(pi);
  if (d <= 0) throw Error(ErrorCode::NonPositiveD, "prod m^chi = " + to_string(d) + " for " + pi.to_string());
  const double n = static_cast<double>(pi.order());
  const UpperHalfPoint inverted(-1.0 / (n * tau.value()));
  const double sqrt_d = std::sqrt(d.convert_to<double>());
  const auto value = eta_product(pi, inverted) * eta_product(saito_dual(pi), tau) * sqrt_d;
  return std::abs(value - 1.0);
}

}  // namespace strange
