#include <doctest.h>

#include "strange/catalog.hpp"
#include "strange/lattice.hpp"
#include "test_support.hpp"

using namespace strange;

namespace {

IntMatrix mat(const std::vector<std::vector<std::int64_t>>& rows) { return IntMatrix(rows); }

// Cofactor expansion: slow, shares no code with the Bareiss routine.
BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][j] * cofactor_det(minor);
    total += j % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

BigInt oracle_det(const GramLattice& l) {
  std::vector<std::vector<BigInt>> m(l.rank(), std::vector<BigInt>(l.rank()));
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) m[i][j] = l.gram(i, j);
  return cofactor_det(m);
}

BigInt product(const std::vector<BigInt>& v) {
  BigInt p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("star3 shape and determinant") {
    auto l = star3(2, 3, 7);
    CHECK(l.rank() == 10);
    CHECK(determinant(l) == -1);
    CHECK(l.gram(9, 9) == -2);
    CHECK(determinant(star3(2, 3, 5)) == 1);
    CHECK(star3(2, 3, 5).rank() == 8);
    CHECK(abs(determinant(star3(3, 3, 6))) == 9);
    CHECK_ERROR(star3(1, 3, 7), Malformed);
  }

  TEST_CASE("star4 determinants") {
    CHECK(star4(2, 2, 2, 3).rank() == 6);
    CHECK(determinant(star4(2, 2, 2, 3)) == -4);
    CHECK(star4(3, 3, 3, 3).rank() == 9);
    CHECK(abs(determinant(star4(3, 3, 3, 3))) == 54);
    CHECK(star4(2, 2, 3, 3).rank() == 7);
    CHECK(abs(determinant(star4(2, 2, 3, 3))) == 12);
  }

  TEST_CASE("Bareiss agrees with cofactor expansion") {
    for (auto arms : std::vector<std::vector<std::int64_t>>{{2, 3, 7}, {3, 3, 4}, {2, 2, 2, 3}, {2, 3, 3, 2}})
      CHECK(determinant(star(arms)) == oracle_det(star(arms)));
    auto l = direct_sum(star3(2, 4, 5), hyperbolic_u());
    CHECK(determinant(l) == oracle_det(l));
  }

  TEST_CASE("unimodular blocks") {
    CHECK(determinant(hyperbolic_u()) == -1);
    CHECK(determinant(k24()) == 1);
    CHECK(k24().rank() == 24);
    CHECK(k3_lattice().rank() == 22);
    CHECK(determinant(minus_e8()) == 1);
    CHECK(determinant(GramLattice{}) == 1);
  }

  TEST_CASE("Pinkham complements with U") {
    CHECK(determinant(direct_sum(star3(2, 3, 7), hyperbolic_u())) == 1);
    CHECK(determinant(direct_sum(star3(3, 4, 4), hyperbolic_u())) == -8);
    CHECK(determinant(parse_lattice_expr("star:2,3,7+U")) == 1);
  }

  TEST_CASE("smith invariants") {
    auto snf = smith_invariants(star4(2, 2, 2, 3));
    CHECK(snf == std::vector<BigInt>{1, 1, 1, 1, 2, 2});
    CHECK(smith_invariants(hyperbolic_u()) == std::vector<BigInt>{1, 1});
    auto s = smith_invariants(star3(2, 3, 10));
    CHECK(product(s) == 4);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] % s[i - 1] == 0);
    CHECK_ERROR(smith_invariants(make_lattice(mat({{0, 0}, {0, 0}}), {"a", "b"})), DegenerateForm);
  }

  TEST_CASE("signature") {
    CHECK(signature(k24()) == Signature{4, 20, 0});
    CHECK(signature(star3(2, 3, 7)) == Signature{1, 9, 0});
    CHECK(signature(hyperbolic_u()) == Signature{1, 1, 0});
    CHECK(signature(star3(2, 3, 6)) == Signature{0, 8, 1});
  }

  TEST_CASE("make_lattice validation") {
    CHECK_ERROR(make_lattice(mat({{-2, 1}, {0, -2}}), {"a", "b"}), Malformed);
    CHECK_ERROR(make_lattice(mat({{-2}}), {"a", "b"}), Malformed);
  }

  TEST_CASE("coxeter element") {
    auto a2 = coxeter_element(dynkin("A2"));
    CHECK(a2.char_poly == IntPolynomial({1, 1, 1}));
    REQUIRE(a2.frame);
    CHECK(*a2.frame == parse_frame("3/1"));
    CHECK(a2.order == std::optional<std::int64_t>(3));

    auto e8 = coxeter_element(star3(2, 3, 5));
    REQUIRE(e8.frame);
    CHECK(*e8.frame == parse_frame("2*3*5*30/1*6*10*15"));

    // C is an isometry: C^t G C = G
    auto l = star3(2, 3, 7);
    auto c = coxeter_matrix(l);
    CHECK(c.transpose() * l.gram * c == l.gram);
    CHECK_ERROR(coxeter_matrix(hyperbolic_u()), DiagonalNotMinusTwo);
  }

  TEST_CASE("coxeter element of the I1,0 fixture") {
    const auto& r = Catalog::builtin().lookup("I1,0");
    REQUIRE(r.coxeter_fixture);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r.coxeter_fixture->size(); ++i) labels.push_back("delta" + std::to_string(i + 1));
    auto rep = coxeter_element(make_lattice(IntMatrix(*r.coxeter_fixture), labels));
    // (l - 1)^2 (l^6 - 1)^3 / ((l - 1)(l^2 - 1)^2), expanded by hand
    auto expect = IntPolynomial::power_minus_one(1).pow(2) * IntPolynomial::power_minus_one(6).pow(3);
    expect = *expect.divide_exact(IntPolynomial::power_minus_one(1));
    expect = *expect.divide_exact(IntPolynomial::power_minus_one(2).pow(2));
    CHECK(rep.char_poly == expect);
    CHECK(rep.char_poly.degree() == 15);
  }

  TEST_CASE("root systems") {
    CHECK(parse_root_system("A11+D7+E6") == std::vector<std::string>{"A11", "D7", "E6"});
    CHECK(parse_root_system("D6^4").size() == 4);
    CHECK(coxeter_frame_of_root_system({"A12", "A12"}) == parse_frame("13^2/1^2"));
    CHECK(coxeter_frame_of_root_system({"D16", "E8"}) == parse_frame("2^2*3*5*30^2/1^2*6*10*15^2"));
    CHECK(coxeter_frame_of_root_system({"A11", "D7", "E6"}) == parse_frame("2^2*3*12^3/1^3*4*6^2"));
    CHECK_ERROR(coxeter_frame_of_root_system({"Q5"}), UnknownSymbol);
    CHECK_ERROR(dynkin("D3"), UnknownSymbol);
  }

  TEST_CASE("characteristic polynomial by Faddeev-LeVerrier") {
    IntMatrix m({{2, 1}, {1, 3}});
    CHECK(characteristic_polynomial(m) == IntPolynomial({5, -5, 1}));
    CHECK(characteristic_polynomial(IntMatrix::identity(3)) == IntPolynomial::power_minus_one(1).pow(3));
  }
}
