#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace seqcm;
using namespace seqcm::testutil;

TEST_SUITE_BEGIN("poly");

TEST_CASE("parse builds canonical sorted polynomials") {
  auto r = ring({"X", "Y", "Z", "W"});
  auto f = P("X*Z + Y*W", r);
  CHECK(f.terms().size() == 2);
  CHECK(f.str() == "X*Z + Y*W");

  CHECK(P("X - X", r).is_zero());
  CHECK_THROWS_AS(P("X + Q", r), Error);
  CHECK_THROWS_AS(P("X + ", r), Error);
  CHECK_THROWS_AS(P("2^3", r), Error);
}

TEST_CASE("parse handles coefficients, powers and implicit products") {
  auto r = ring({"x", "y"});
  CHECK(P("3x^2y", r) == P("3*x^2*y", r));
  CHECK(P("1/2*x + 1/2*x", r) == P("x", r));
  CHECK(P("-x + y", r) == P("y - x", r));
  CHECK(P("x^3", r).total_degree() == 3);
}

TEST_CASE("prime field coefficients") {
  auto r2 = ring({"X", "Y"}, MonomialOrder::grevlex(), FieldSpec::prime_field(2));
  auto f = P("X + Y", r2);
  CHECK(poly_product(f, f) == P("X^2 + Y^2", r2));
  CHECK_THROWS_AS(P("1/2*X", r2), Error);
  CHECK_THROWS_AS(FieldSpec::prime_field(6), Error);

  auto r5 = ring({"x"}, MonomialOrder::grevlex(), FieldSpec::prime_field(5));
  CHECK(P("3x + 4x", r5) == P("2x", r5));
  CHECK(P("1/2*x", r5) == P("3x", r5));  // 2^{-1} = 3 mod 5
}

TEST_CASE("product examples") {
  auto r = ring({"X", "Y"});
  CHECK(poly_product(P("X+Y", r), P("X-Y", r)) == P("X^2 - Y^2", r));
  CHECK(poly_product(P("X+Y", r), Polynomial::zero(r)).is_zero());

  auto s = ring({"x"});
  CHECK_THROWS_AS(poly_product(P("X", r), P("x", s)), Error);
}

TEST_CASE("compare_monomials examples") {
  // grevlex: same degree, x^2 y beats x y^2 (x > y)
  CHECK(compare_monomials({2, 1}, {1, 2}, MonomialOrder::grevlex()) == Cmp::GT);
  // lex dominance: x > y^3
  CHECK(compare_monomials({1, 0}, {0, 3}, MonomialOrder::lex()) == Cmp::GT);
  CHECK(compare_monomials({2, 5}, {2, 5}, MonomialOrder::lex()) == Cmp::EQ);
  CHECK_THROWS_AS(compare_monomials({1}, {1, 2}, MonomialOrder::lex()), Error);

  // block order compares the first block before the second
  auto blk = MonomialOrder::block(1, MonomialOrder::Kind::lex, MonomialOrder::Kind::grevlex);
  CHECK(compare_monomials({1, 0, 0}, {0, 9, 9}, blk) == Cmp::GT);
  CHECK(compare_monomials({1, 0, 1}, {1, 1, 0}, blk) == Cmp::LT);
}

TEST_CASE("ring axioms hold exactly on random triples") {
  auto r = ring({"x", "y", "z"});
  std::mt19937 rng(12345);
  for (int it = 0; it < 60; ++it) {
    auto a = random_poly(rng, r, 3, 4);
    auto b = random_poly(rng, r, 3, 4);
    auto c = random_poly(rng, r, 3, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("printing round-trips") {
  auto r = ring({"x", "y", "z"});
  std::mt19937 rng(777);
  for (int it = 0; it < 60; ++it) {
    auto f = random_poly(rng, r, 4, 5);
    CHECK(parse_polynomial(f.str(), r) == f);
  }
  // parse -> print -> parse is stable on canonical text
  auto g = P("2*x^2*y - z + 1/3", r);
  CHECK(P(g.str(), r) == g);
}

TEST_CASE("monomial order axioms on random triples") {
  std::mt19937 rng(42);
  std::vector<MonomialOrder> orders = {
      MonomialOrder::lex(), MonomialOrder::grevlex(),
      MonomialOrder::block(2, MonomialOrder::Kind::grevlex, MonomialOrder::Kind::lex)};
  auto random_expo = [&](int n) {
    std::vector<unsigned> e(n);
    std::uniform_int_distribution<int> pick(0, 4);
    for (auto& x : e) x = static_cast<unsigned>(pick(rng));
    return e;
  };
  for (const auto& ord : orders) {
    for (int it = 0; it < 200; ++it) {
      auto a = random_expo(4), b = random_expo(4), c = random_expo(4);
      auto ab = compare_monomials(a, b, ord);
      auto ba = compare_monomials(b, a, ord);
      CHECK(static_cast<int>(ab) == -static_cast<int>(ba));  // totality/antisymmetry
      CHECK(compare_monomials(a, a, ord) == Cmp::EQ);
      // 1 is minimal
      std::vector<unsigned> one(4, 0);
      if (a != one) CHECK(compare_monomials(a, one, ord) == Cmp::GT);
      // multiplicative: a < b implies ac < bc
      if (ab == Cmp::LT) {
        std::vector<unsigned> ac(4), bc(4);
        for (int i = 0; i < 4; ++i) {
          ac[i] = a[i] + c[i];
          bc[i] = b[i] + c[i];
        }
        CHECK(compare_monomials(ac, bc, ord) == Cmp::LT);
      }
    }
  }
}

TEST_SUITE_END();
