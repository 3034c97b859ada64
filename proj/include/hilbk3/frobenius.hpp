#pragma once

// The graded Frobenius algebra A(V,n) = Sym(V) / <harmonic polynomials of degree n+1>,
// which models the subring of H^*(M^[n]) generated by H^2. Polynomial degree i
// corresponds to cohomological degree 2i.

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "hilbk3/bb_lattice.hpp"
#include "hilbk3/linalg.hpp"

namespace hilbk3 {

using Exponent = std::vector<int>;

/// Monomial basis of Sym^d(V), exponent vectors in decreasing lexicographic order.
class SymSpace {
 public:
  SymSpace(std::size_t dim_v, int degree);

  std::size_t dim_v() const { return dim_v_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::size_t index(const Exponent& e) const;

 private:
  std::size_t dim_v_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> lookup_;
};

/// binom(dim_v + d - 1, d)
std::size_t sym_dimension(std::size_t dim_v, int d);

/// Product of homogeneous polynomials given by coefficient vectors.
Vector sym_multiply(const SymSpace& a, const Vector& x, const SymSpace& b, const Vector& y,
                    const SymSpace& out);

/// alpha^d for a linear form alpha in V.
Vector linear_power(const Vector& alpha, const SymSpace& out);

/// Contraction with the form: Delta(e_i e_j) = 2 gram_ij. Maps Sym^d -> Sym^(d-2);
/// returned matrix acts on coefficient columns. Throws for d < 2.
Matrix laplacian_matrix(const Matrix& gram, int d);
Vector laplacian(const Matrix& gram, int d, const Vector& x);

/// Rows span ker(Delta) in Sym^d; for d < 2 all of Sym^d.
Matrix harmonic_part(const Matrix& gram, int d);

/// dim Sym^d - rank(Delta); avoids forming the kernel.
std::size_t harmonic_dimension(const Matrix& gram, int d);

/// The invariant quadric sum gram^{-1}_{ij} e_i e_j in Sym^2.
Vector quadric(const Matrix& gram);

/// Action of g on Sym^d by substitution e_j -> sum_i g_ij e_i; columns are images of monomials.
Matrix substitution_matrix(const Matrix& g, int d);

class FrobeniusAlgebra {
 public:
  /// Throws std::invalid_argument for a degenerate gram or n < 1, and
  /// std::runtime_error when the quotient dimensions break the Frobenius pattern.
  static FrobeniusAlgebra build(const Matrix& gram, int n, bool with_tables = true);

  int n() const { return n_; }
  std::size_t dim_v() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  int top() const { return 2 * n_; }  // polynomial degree of the one-dimensional top piece

  std::size_t dim(int i) const;  // dim A_{2i}
  std::vector<std::size_t> dims() const;
  const SymSpace& sym(int i) const { return sym_.at(static_cast<std::size_t>(i)); }

  /// Sym^i coefficients -> quotient coordinates (zero for i > 2n).
  Vector reduce(int i, const Vector& sym_coeffs) const;
  /// Quotient coordinates -> Sym^i via standard monomials.
  Vector lift(int i, const Vector& a) const;
  bool in_ideal(int i, const Vector& sym_coeffs) const;

  Vector multiply(int i, const Vector& a, int j, const Vector& b) const;
  bool has_tables() const { return !tables_.empty(); }
  /// Row (p * dim(j) + q) is the product of basis elements p of A_{2i} and q of A_{2j}.
  const Matrix& table(int i, int j) const;

  Rational counit(const Vector& top_element) const;
  /// Matrix of (a, b) -> counit(ab) between degrees i and 2n - i.
  Matrix pairing_matrix(int i) const;
  bool pairing_nondegenerate() const;

  bool is_associative() const;
  bool is_commutative() const;

  /// alpha^k in quotient coordinates for a linear form alpha in V.
  Vector power(const Vector& alpha, int k) const;

  /// g preserves the ideal and the induced map on A respects the tables.
  bool is_algebra_automorphism(const Matrix& g) const;

 private:
  FrobeniusAlgebra(Matrix gram, int n) : gram_(std::move(gram)), n_(n) {}

  Matrix gram_;
  int n_;
  std::vector<SymSpace> sym_;                // degrees 0..2n+1
  std::vector<RowSpace> ideal_;              // I_d inside Sym^d, degrees 0..2n+1
  std::vector<std::vector<std::size_t>> standard_;  // monomials spanning the quotient
  std::map<std::pair<int, int>, Matrix> tables_;
};

/// Same as FrobeniusAlgebra::build.
FrobeniusAlgebra build_algebra(const Matrix& gram, int n, bool with_tables = true);

/// Expected dim A_{2i} = dim S^{min(i, 2n-i)}(V).
std::vector<std::size_t> frobenius_dimension_pattern(std::size_t dim_v, int n);

/// A nonzero rational vector with a^T G a = 0: a zero-norm diagonal vector, a pair of
/// diagonal vectors whose norm ratio is minus a rational square, or a small integer search.
std::optional<Vector> find_isotropic_vector(const Matrix& gram);

/// Second intersection of the line v0 + t u with the quadric, t = -2 (v0,u)/(u,u).
/// Returns u itself when u is isotropic. Requires v0 isotropic.
Vector isotropic_through(const Matrix& gram, const Vector& v0, const Vector& u);

/// Isotropic vector through v0 in a random small-integer direction; never zero.
Vector random_isotropic_vector(const Matrix& gram, const Vector& v0, std::mt19937_64& rng);

/// f = B + 2(n-1) d^2 on S^2 H^2(M^[n]), the H^2-part of the restriction of
/// H^4(M^[n]) -> H^4(M) along the embedding x -> (m_x)^k with n = k(k+1)/2.
/// Covariant. Throws unless n > 1 is triangular.
Sym2Tensor restriction_functional(const H2Lattice& L);

}  // namespace hilbk3
