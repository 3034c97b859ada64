#include <doctest.h>

#include <random>

#include "hilbk3/bb_lattice.hpp"
#include "hilbk3/certify.hpp"
#include "hilbk3/frobenius.hpp"
#include "oracles.hpp"

using namespace hilbk3;

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool in_span(const std::array<Matrix, 3>& gens, const Matrix& m) {
  RowSpace s(m.rows() * m.cols());
  auto flat = [](const Matrix& x) {
    Vector v;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) v.push_back(x(i, j));
    return v;
  };
  for (const auto& g : gens) s.insert(flat(g));
  return s.contains(flat(m));
}

}  // namespace

TEST_CASE("K3 lattice") {
  const Matrix g = k3_lattice_gram();
  CHECK(g.rows() == 22);
  CHECK(g.is_symmetric());
  CHECK(determinant(g) == -1);
  for (std::size_t i = 0; i < 22; ++i) CHECK(mpz_class(g(i, i).get_num()) % 2 == 0);
  const auto s = signature(g);
  CHECK(s.positive == 3);
  CHECK(s.negative == 19);
  CHECK(s.zero == 0);
}

TEST_CASE("H2 of the Hilbert scheme") {
  const auto L1 = H2Lattice::k3(1);
  CHECK_FALSE(L1.has_delta());
  CHECK(L1.dim() == 22);
  CHECK_THROWS(H2Class::delta(L1));
  for (int n = 2; n <= 20; ++n) {
    const auto L = H2Lattice::k3(n);
    CHECK(L.dim() == 23);
    const auto d = H2Class::delta(L);
    CHECK(bb_pair(L, d, d) == -2 * (n - 1));
    Vector v = zero_vector(22);
    v[n % 22] = 1;
    CHECK(bb_pair(L, H2Class::from_v(v), d) == 0);
  }
  CHECK_THROWS(H2Lattice(0, k3_lattice_gram()));
  CHECK_THROWS(H2Lattice(2, Matrix::from_rows({{1, 1}, {1, 1}})));
  CHECK_THROWS(H2Lattice(2, Matrix::from_rows({{1, 2}, {0, 1}})));
}

TEST_CASE("pullback along the diagonal embedding") {
  const auto L6 = H2Lattice::k3(6), L2 = H2Lattice::k3(2), L1 = H2Lattice::k3(1);
  const auto d = pullback(L6, L2, H2Class::delta(L6));
  CHECK(d.delta_coeff == 3);
  CHECK(is_zero(d.v_part));
  CHECK(pullback(L6, L1, H2Class::delta(L6)).delta_coeff == 0);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    Vector a = zero_vector(22), b = zero_vector(22);
    for (auto& x : a) x = oracle::random_rational(rng);
    for (auto& x : b) x = oracle::random_rational(rng);
    const auto x = H2Class::from_v(a), y = H2Class::from_v(b);
    CHECK(pullback(L6, L2, x) == x);
    CHECK(bb_pair(L2, pullback(L6, L2, x), pullback(L6, L2, y)) == bb_pair(L6, x, y));
  }
  CHECK_THROWS(pullback_matrix(L6, H2Lattice::k3(4)));  // 4 does not divide 6
  CHECK_THROWS(pullback_matrix(H2Lattice::k3(4), L2));  // 4/2 = 2 not triangular
  CHECK_THROWS(pullback_matrix(L6, H2Lattice(2, Matrix::identity(22))));
}

TEST_CASE("obstruction coefficient") {
  CHECK(obstruction_coefficient(6, 2) == Rational(1, 5));
  CHECK(obstruction_coefficient(12, 4) == Rational(1, 33));
  CHECK(obstruction_coefficient(12, 2) == Rational(5, 22));
  CHECK(obstruction_coefficient(5, 5) == 0);
  CHECK_THROWS(obstruction_coefficient(6, 1));
  CHECK_THROWS(obstruction_coefficient(8, 4));
  CHECK_THROWS(obstruction_coefficient(7, 2));
  for (int n = 2; n <= 60; ++n)
    for (int l = 2; l <= n; ++l) {
      if (n % l || !oracle::triangular(n / l)) continue;
      const Rational t(n / l);
      CHECK(obstruction_coefficient(n, l) == Rational(1, 2 * (l - 1)) - t / (2 * (n - 1)));
      CHECK((obstruction_coefficient(n, l) == 0) == (n == l));
      CHECK((pullback_tensor_coefficient(n, l) == 0) == (n == l));
    }
}

TEST_CASE("pulled-back dual form differs by a multiple of delta squared") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 4; ++trial) {
    const Matrix g = trial == 0 ? k3_lattice_gram() : oracle::random_gram(rng, 5);
    for (auto [n, l] : {std::pair{6, 2}, {12, 4}, {12, 2}, {3, 3}, {30, 3}}) {
      const H2Lattice Ln(n, g), Ll(l, g);
      const Matrix diff = pullback_tensor(Ln, Ll, bb_tensor(Ln)).m - bb_tensor(Ll).m;
      Matrix expected(Ll.dim(), Ll.dim());
      expected(Ll.delta_index(), Ll.delta_index()) = pullback_tensor_coefficient(n, l);
      CHECK(diff == expected);
    }
  }
  const auto L6 = H2Lattice::k3(6), L2 = H2Lattice::k3(2);
  CHECK_THROWS(pullback_tensor(L6, L2, bb_form(L6)));
}

TEST_CASE("su(2) model on H^2") {
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 6}) {
    const auto L = H2Lattice::k3(n);
    for (int t = 0; t < 5; ++t) {
      const auto W = random_period_triple(L, rng);
      CHECK(delta_projects_nontrivially(L, W));
      const auto gens = su2_generators(L, W);
      for (const auto& gen : gens) {
        CHECK((gen.transpose() * L.full_gram() + L.full_gram() * gen).is_zero());  // skew-adjoint
        for (std::size_t a = 0; a < 3; ++a) CHECK(in_span(gens, commutator(gen, gens[a])));
      }
      CHECK(is_su2_invariant(L, bb_form(L), W));
      CHECK(is_su2_invariant(L, bb_tensor(L), W));
      CHECK_FALSE(is_su2_invariant(L, d_squared(L), W));
      CHECK(d_orbit_dimension(L, W) == 4);
      CHECK(orbit_dimension_d2(L, W) == 9);
      CHECK(orbit_dimension_d2(L, W) > 1);

      const auto W0 = random_period_triple(L, rng, true);
      CHECK_FALSE(delta_projects_nontrivially(L, W0));
      CHECK(is_su2_invariant(L, d_squared(L), W0));
      CHECK(orbit_dimension_d2(L, W0) == 1);
    }
  }
}

TEST_CASE("orbit of d^2 lies in the symmetric square of the orbit of d") {
  std::mt19937_64 rng(8);
  const auto L = H2Lattice::k3(3);
  const auto W = random_period_triple(L, rng);
  const auto basis = d_orbit_basis(L, W);
  RowSpace products(L.dim() * (L.dim() + 1) / 2);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      Matrix m(L.dim(), L.dim());
      for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) m(i, j) = basis[a][i] * basis[b][j] + basis[b][i] * basis[a][j];
      products.insert(pack_symmetric(m));
    }
  CHECK(products.dim() == 10);
  // walk the orbit again and test membership
  const auto gens = su2_generators(L, W);
  std::vector<Sym2Tensor> frontier{d_squared(L)};
  for (int depth = 0; depth < 4; ++depth) {
    std::vector<Sym2Tensor> next;
    for (const auto& t : frontier) {
      CHECK(products.contains(pack_symmetric(t.m)));
      for (const auto& gen : gens) next.push_back(act(gen, t));
    }
    frontier = std::move(next);
  }
}

TEST_CASE("period triples") {
  const auto L = H2Lattice::k3(4);
  const auto W = canonical_period_triple(L);
  CHECK_NOTHROW(validate(L, W));
  CHECK(delta_projects_nontrivially(L, W));
  CHECK(canonical_period_triple(L).w == W.w);
  PeriodTriple bad = W;
  bad.w[1] = bad.w[0];
  CHECK_THROWS(validate(L, bad));
  // a definite negative form has no period triple
  CHECK_THROWS(canonical_period_triple(H2Lattice(2, Matrix::identity(3).scaled(-1))));
}

TEST_CASE("h4 obstruction") {
  std::mt19937_64 rng(9);
  for (int n : {3, 6, 10, 15}) {
    const auto L = H2Lattice::k3(n);
    const auto f = restriction_functional(L);
    CHECK(f.m(L.delta_index(), L.delta_index()) == 0);  // f(delta, delta) = 0
    for (int t = 0; t < 3; ++t) CHECK(h4_obstruction(L, random_period_triple(L, rng)));
    CHECK_THROWS(h4_obstruction(L, random_period_triple(L, rng, true)));
  }
  CHECK_THROWS(restriction_functional(H2Lattice::k3(4)));
  CHECK_THROWS(restriction_functional(H2Lattice::k3(1)));
}

TEST_CASE("certification of small Hilbert schemes") {
  for (int n = 2; n <= 12; ++n) {
    const auto rep = certify_no_trianalytic(n);
    CHECK(rep.certified);
    for (const auto& c : rep.candidates) {
      if (c.kind == CandidateKind::simple) {
        CHECK(c.obstructed);
        CHECK(c.diagram.length() == c.copies);
        if (c.copies >= 2) {
          CHECK(c.obstruction.has_value());
          CHECK(*c.weak_criterion);
        } else {
          CHECK(c.h4.value());
        }
      }
      if (c.kind == CandidateKind::product) CHECK_FALSE(c.obstructed);
    }
  }
  const auto six = certify_no_trianalytic(6);
  REQUIRE(six.candidates.size() == 4);
  CHECK(*six.candidates[1].obstruction == Rational(1, 5));
  CHECK(six.product_flags == 1);
  CHECK(certify_no_trianalytic(2).proper_simple == 0);
  CHECK_THROWS(certify_no_trianalytic(1));

  // verdicts do not depend on the V form
  std::mt19937_64 rng(10);
  Matrix g = oracle::random_gram(rng, 4);
  while (signature(g).positive < 3) g = oracle::random_gram(rng, 4);
  CHECK(certify_no_trianalytic(6, g).certified);
}
