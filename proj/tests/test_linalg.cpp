#include <doctest.h>

#include <random>

#include "hilbk3/linalg.hpp"
#include "hilbk3/rational.hpp"
#include "oracles.hpp"

using namespace hilbk3;

TEST_CASE("fraction strings round trip") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(to_fraction_string(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const Rational q = oracle::random_rational(rng, 1000, 97);
    CHECK(parse_rational(to_fraction_string(q)) == q);
  }
}

TEST_CASE("rank and nullspace agree") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? Rational(0) : oracle::random_rational(rng);
    const Matrix k = nullspace(m);
    CHECK(rank(m) + k.rows() == c);
    for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero(m * k.row(i)));
  }
}

TEST_CASE("inverse and determinant") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = oracle::random_invertible(rng, 4);
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Matrix::identity(4));
    CHECK(determinant(a) * determinant(*inv) == 1);
  }
  Matrix singular = Matrix::from_rows({{1, 2}, {2, 4}});
  CHECK_FALSE(inverse(singular).has_value());
  CHECK(determinant(singular) == 0);
}

TEST_CASE("row space membership") {
  RowSpace s(3);
  CHECK(s.insert({1, 1, 0}));
  CHECK_FALSE(s.insert({2, 2, 0}));
  CHECK(s.insert({0, 1, 1}));
  CHECK(s.contains({1, 0, -1}));
  CHECK_FALSE(s.contains({0, 0, 1}));
  CHECK(s.dim() == 2);
}

TEST_CASE("diagonalization is a congruence") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + rng() % 5;
    Matrix g = oracle::random_gram(rng, d);
    const auto diag = diagonalize_form(g);
    const Matrix prod = diag.basis * g * diag.basis.transpose();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) CHECK(prod(i, j) == (i == j ? diag.norms[i] : Rational(0)));
    CHECK(determinant(diag.basis) != 0);
    CHECK(diag.positive + diag.negative == d);
  }
  // hyperbolic plane has no anisotropic basis vector
  const auto u = diagonalize_form(Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(u.positive == 1);
  CHECK(u.negative == 1);
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS(Matrix(2, 3) * Matrix(2, 3));
  CHECK_THROWS(Matrix::from_rows({{1, 2}, {3}}));
}
