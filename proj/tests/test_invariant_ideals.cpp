#include <doctest.h>

#include "hilbk3/invariant_ideals.hpp"
#include "oracles.hpp"

using namespace hilbk3;

TEST_CASE("truncated ring layout") {
  const TruncatedRing r(3);
  CHECK(r.dim() == 6);
  CHECK(r.index(0, 0) == 0);
  CHECK(r.index(1, 0) == 1);
  CHECK(r.index(0, 1) == 2);
  CHECK(r.index(2, 0) == 3);
  CHECK(r.index(0, 2) == 5);
  CHECK_THROWS(r.index(2, 1));
  CHECK(r.graded_piece(2) == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK_THROWS(TruncatedRing(0));
  // x * x = x^2, x * x^2 = 0 in C[x,y]/m^3
  const Matrix mx = r.multiplication(1, 0);
  CHECK(mx(r.index(2, 0), r.index(1, 0)) == 1);
  CHECK(mx.col(r.index(2, 0)) == zero_vector(6));
}

TEST_CASE("sl2 action") {
  for (int N = 1; N <= 7; ++N) CHECK(sl2_action(TruncatedRing(N)).brackets_hold());
  // e(y^2) = 2xy
  const TruncatedRing r(3);
  const auto s = sl2_action(r);
  CHECK(s.e(r.index(1, 1), r.index(0, 2)) == 2);
  CHECK(s.h(r.index(2, 0), r.index(2, 0)) == 2);
}

TEST_CASE("irreducibility certificate") {
  for (int N = 1; N <= 8; ++N)
    for (int l = 0; l < N; ++l) CHECK(irreducibility_certificate(l, N));
  CHECK_THROWS(irreducibility_certificate(3, 3));
  // negative control: two copies of A_1 have two highest weight vectors
  const TruncatedRing r(2);
  const auto s = sl2_action(r);
  const Matrix e1 = restrict_block(s.e, 1, 2);
  const Matrix doubled = Matrix::direct_sum(e1, e1);
  CHECK(highest_weight_count(doubled) == 2);
  CHECK_FALSE(irreducibility_certificate(doubled));
}

TEST_CASE("invariant ideals are powers of the maximal ideal") {
  CHECK_THROWS(classify_invariant_ideals(1));
  const auto two = classify_invariant_ideals(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].power == 1);
  for (int N = 2; N <= 10; ++N) {
    const auto ideals = classify_invariant_ideals(N);
    REQUIRE(ideals.size() == static_cast<std::size_t>(N - 1));
    for (int j = 1; j < N; ++j) {
      CHECK(ideals[j - 1].power == j);
      std::vector<int> degrees;
      for (int l = j; l < N; ++l) degrees.push_back(l);
      CHECK(ideals[j - 1].degrees == degrees);
    }
  }
}

TEST_CASE("ideal test") {
  const TruncatedRing r(4);
  // span of x alone is not an ideal, m^2 is
  Vector x = zero_vector(r.dim());
  x[r.index(1, 0)] = 1;
  CHECK_FALSE(is_ideal(r, Matrix::from_rows({x})));
  CHECK(is_ideal(r, ideal_basis(monomial_ideal(YoungDiagram({2, 1})), r)));
}

TEST_CASE("monomial ideals") {
  const auto I = monomial_ideal(YoungDiagram({3, 1}));
  CHECK(I.colength() == 4);
  CHECK(I.generators == std::vector<std::pair<int, int>>{{3, 0}, {1, 1}, {0, 2}});
  CHECK(I.contains(3, 0));
  CHECK(I.contains(1, 1));
  CHECK_FALSE(I.contains(2, 0));
  CHECK_FALSE(I.contains(0, 1));
  CHECK_FALSE(I.maximal_ideal_power().has_value());
  CHECK(monomial_ideal(YoungDiagram({3, 2, 1})).maximal_ideal_power() == 3);
  CHECK(monomial_ideal(YoungDiagram({1})).maximal_ideal_power() == 1);
}

TEST_CASE("punctual fixed points") {
  CHECK_THROWS(punctual_fixed_points(0));
  CHECK(punctual_fixed_points(2).empty());
  for (int i = 1; i <= 30; ++i) {
    const auto fixed = punctual_fixed_points(i);
    CHECK((fixed.size() == 1) == oracle::triangular(i));
    CHECK(fixed.size() <= 1);
    for (const auto& I : fixed) {
      CHECK(I.colength() == i);
      CHECK(I.maximal_ideal_power().has_value());
      CHECK(*I.maximal_ideal_power() * (*I.maximal_ideal_power() + 1) / 2 == i);
    }
  }
}
