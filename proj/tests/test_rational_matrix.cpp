#include "doctest.h"
#include "support/random_poly.hpp"
#include "univalg/errors.hpp"
#include "univalg/matrix.hpp"

using namespace univalg;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(0, -5).denominator() == "1");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+3/9") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("2/-3"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("big rationals do not overflow") {
  Rational r(1);
  for (int k = 0; k < 80; ++k) r *= Rational(3, 2);
  for (int k = 0; k < 80; ++k) r /= Rational(3, 2);
  CHECK(r.is_one());
}

TEST_CASE("row reduction: rank, nullspace and solve") {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(a * ns[0]));

  const auto sol = solve(a, {Rational(1), Rational(2), Rational(0)});
  CHECK(sol.consistent);
  CHECK(sol.nullity == 1);
  CHECK(a * sol.particular == Vector{Rational(1), Rational(2), Rational(0)});
  CHECK_FALSE(solve(a, {Rational(1), Rational(3), Rational(0)}).consistent);
}

TEST_CASE("inverse of random invertible matrices") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = testing::random_invertible(rng, 3);
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(3));
  }
  CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("kronecker product indexing") {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix k = kron(a, b);
  CHECK(k(0 * 2 + 1, 1 * 2 + 0) == Rational(2));
  CHECK(k(1 * 2 + 0, 0 * 2 + 1) == Rational(3));
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
}
