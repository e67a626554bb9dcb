#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include "strange/catalog.hpp"
#include "strange/eta.hpp"
#include "strange/verify.hpp"
#include "test_support.hpp"

using namespace strange;

namespace {

std::string golden_value(const std::string& file, const std::string& key) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + file);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + " = ", 0) == 0) return line.substr(key.size() + 3);
  return {};
}

}  // namespace

TEST_SUITE("etaq") {
  TEST_CASE("eta at i matches the gamma closed form") {
    const double expect = std::tgamma(0.25) / (2.0 * std::pow(std::numbers::pi, 0.75));
    auto v = eta(UpperHalfPoint(0, 1));
    CHECK(v.real() == doctest::Approx(0.768225422).epsilon(1e-9));
    CHECK(std::abs(v.real() - expect) < 1e-13);
    CHECK(std::abs(v.imag()) < 1e-15);
  }

  TEST_CASE("translation by one") {
    const auto phase = std::polar(1.0, std::numbers::pi / 12);
    for (const auto& tau : eta_sample_points()) {
      auto shifted = eta(UpperHalfPoint(tau.re() + 1, tau.im()));
      CHECK(std::abs(shifted - phase * eta(tau)) < 1e-12);
    }
  }

  TEST_CASE("product and pentagonal series agree") {
    for (const auto& tau : eta_sample_points()) CHECK(std::abs(eta(tau) - eta_pentagonal(tau)) < 1e-12);
    UpperHalfPoint low(0.2, 0.02);
    CHECK(std::abs(eta(low) - eta_pentagonal(low)) < 1e-9 * std::abs(eta(low)) + 1e-30);
  }

  TEST_CASE("domain guard") {
    CHECK_ERROR(UpperHalfPoint(0, 0.005), DomainError);
    CHECK_ERROR(UpperHalfPoint(0, -1), DomainError);
    CHECK_ERROR(UpperHalfPoint(std::nan(""), 1), DomainError);
  }

  TEST_CASE("eta products") {
    UpperHalfPoint i(0, 1);
    CHECK(std::abs(eta_product(parse_frame("1"), i) - eta(i)) < 1e-15);
    const auto& e12 = *Catalog::builtin().lookup("E12").frame;
    auto v = eta_product(e12, i);
    CHECK(std::isfinite(std::abs(v)));
    CHECK(std::abs(v) > 0);
    CHECK(std::abs(v) == doctest::Approx(std::stod(golden_value("e12_eta_at_i.txt", "abs"))).epsilon(1e-12));

    auto row21a = concatenate(e12, saito_dual(e12));
    UpperHalfPoint tau(0.3, 1.7), tau1(1.3, 1.7);
    CHECK(std::abs(eta_product(row21a, tau1) - eta_product(row21a, tau)) < 1e-9 * std::abs(eta_product(row21a, tau)));
  }

  TEST_CASE("periodicity phase for catalog shapes") {
    UpperHalfPoint tau(0.1, 1.2), tau1(1.1, 1.2);
    for (const auto& r : Catalog::builtin().records()) {
      const auto& pi = r.duality_shape();
      const double deg = static_cast<double>(degree(pi));
      auto expect = std::polar(1.0, 2 * std::numbers::pi * deg / 24) * eta_product(pi, tau);
      CHECK(std::abs(eta_product(pi, tau1) - expect) < 1e-9 * std::abs(expect));
    }
  }

  TEST_CASE("Saito identity examples") {
    const auto& c = Catalog::builtin();
    CHECK(saito_identity_residual(*c.lookup("E12").frame, UpperHalfPoint(0, 1)) < 1e-8);
    CHECK(saito_identity_residual(*c.lookup("E13").frame, UpperHalfPoint(0.3, 1.7)) < 1e-8);
    CHECK(saito_identity_residual(*c.lookup("J3,0").frame, UpperHalfPoint(0, 1)) < 1e-8);
    // -1/(42 * 5i) lies at height 1/210, below the guard
    CHECK_ERROR(saito_identity_residual(*c.lookup("E12").frame, UpperHalfPoint(0, 5)), DomainError);
  }
}
