#pragma once

// sl2-invariant ideals of the truncated ring C[x,y]/m^N and the torus-fixed,
// sl2-stable points of the punctual Hilbert scheme.

#include <optional>
#include <utility>
#include <vector>

#include "hilbk3/linalg.hpp"
#include "hilbk3/partitions.hpp"

namespace hilbk3 {

/// C[x,y]/m^N with monomial basis ordered by degree, then by decreasing x-exponent.
class TruncatedRing {
 public:
  explicit TruncatedRing(int order);

  int order() const { return order_; }
  std::size_t dim() const { return monomials_.size(); }
  const std::vector<std::pair<int, int>>& monomials() const { return monomials_; }
  /// Index of x^a y^b; requires a + b < order.
  std::size_t index(int a, int b) const;
  /// First index and size of the homogeneous piece A_l.
  std::pair<std::size_t, std::size_t> graded_piece(int l) const;

  /// Multiplication by x^a y^b as a matrix on the basis (degrees >= N vanish).
  Matrix multiplication(int a, int b) const;

 private:
  int order_;
  std::vector<std::pair<int, int>> monomials_;
};

/// e = x d/dy, f = y d/dx, h = x d/dx - y d/dy.
struct Sl2Action {
  Matrix e, f, h;

  bool brackets_hold() const;  // [e,f] = h, [h,e] = 2e, [h,f] = -2f
};

Sl2Action sl2_action(const TruncatedRing& ring);

/// Restriction of an operator to the span of basis indices [offset, offset + size).
Matrix restrict_block(const Matrix& op, std::size_t offset, std::size_t size);

/// dim ker(e) on a finite-dimensional sl2-module: the number of irreducible summands.
std::size_t highest_weight_count(const Matrix& e);

/// A_l is sl2-irreducible inside C[x,y]/m^N. Requires l < N.
bool irreducibility_certificate(int l, int N);
/// Same criterion for an arbitrary raising operator.
bool irreducibility_certificate(const Matrix& e);

struct InvariantIdeal {
  int power = 0;               // the ideal is m^power
  std::vector<int> degrees;    // graded pieces it contains
};

/// Proper nonzero sl2-invariant ideals of C[x,y]/m^N, increasing by power. Requires N >= 2.
std::vector<InvariantIdeal> classify_invariant_ideals(int N);

/// Subspace spanned by the given basis rows is closed under multiplication by x and y.
bool is_ideal(const TruncatedRing& ring, const Matrix& basis_rows);

/// Torus-fixed ideal of finite colength: monomials outside the staircase.
/// Row b of the staircase holds the x-exponents 0..lambda_{b+1}-1 of y^b.
struct MonomialIdeal {
  YoungDiagram staircase;
  std::vector<std::pair<int, int>> generators;  // minimal generators (a, b) for x^a y^b

  int colength() const { return staircase.weight(); }
  bool contains(int a, int b) const;
  /// Power of m when the staircase is (l, l-1, ..., 1).
  std::optional<int> maximal_ideal_power() const;
};

MonomialIdeal monomial_ideal(const YoungDiagram& staircase);

/// Basis rows (unit vectors) of the ideal inside C[x,y]/m^N.
Matrix ideal_basis(const MonomialIdeal& I, const TruncatedRing& ring);

/// Colength-i monomial ideals stable under e and f. Requires i >= 1.
std::vector<MonomialIdeal> punctual_fixed_points(int i);

}  // namespace hilbk3
