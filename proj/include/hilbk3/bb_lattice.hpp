#pragma once

// H^2(M^[n]) = V + Q*delta_n with its Bogomolov-Beauville form, pullbacks to
// H^2(M^[l]) along universal subvarieties, and an exact model of the su(2)
// action on H^2 (rotations of a positive three-plane, trivial on its complement).

#include <array>
#include <cstdint>
#include <random>

#include "hilbk3/linalg.hpp"

namespace hilbk3 {

/// Even unimodular lattice E8(-1)^2 + U^3 of signature (3,19): H^2 of a K3 surface.
Matrix k3_lattice_gram();

struct FormSignature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

FormSignature signature(const Matrix& gram);

/// Quadratic space H^2(M^[n]). The form restricts to `gram` on V, delta_n is
/// orthogonal to V, and (delta_n, delta_n) = -2(n-1). For n = 1 there is no delta.
class H2Lattice {
 public:
  /// Throws std::invalid_argument unless gram is symmetric and nondegenerate and n >= 1.
  H2Lattice(int n, Matrix gram);
  static H2Lattice k3(int n) { return H2Lattice(n, k3_lattice_gram()); }

  int n() const { return n_; }
  bool has_delta() const { return n_ >= 2; }
  std::size_t dim_v() const { return gram_.rows(); }
  /// dim_v + 1 when delta exists; delta is the last coordinate.
  std::size_t dim() const { return dim_v() + (has_delta() ? 1 : 0); }
  std::size_t delta_index() const { return dim_v(); }

  const Matrix& gram_v() const { return gram_; }
  Rational delta_norm() const { return Rational(-2 * (n_ - 1)); }
  const Matrix& full_gram() const { return full_; }

 private:
  int n_;
  Matrix gram_;
  Matrix full_;
};

struct H2Class {
  Vector v_part;
  Rational delta_coeff = 0;

  static H2Class delta(const H2Lattice& L);
  static H2Class from_v(Vector v) { return {std::move(v), 0}; }
  /// Coordinates in the lattice basis (V first, then delta if present).
  Vector coords(const H2Lattice& L) const;
  static H2Class from_coords(const H2Lattice& L, const Vector& coords);

  bool operator==(const H2Class&) const = default;
};

Rational bb_pair(const H2Lattice& L, const H2Class& x, const H2Class& y);
Rational bb_pair_coords(const H2Lattice& L, const Vector& x, const Vector& y);

/// Matrix of phi^*: H^2(M^[n]) -> H^2(M^[l]) (dim_l x dim_n): identity on V,
/// delta_n -> (n/l) delta_l, and delta_n -> 0 when l = 1. Throws unless l | n and n/l is triangular.
Matrix pullback_matrix(const H2Lattice& from_n, const H2Lattice& to_l);

H2Class pullback(const H2Lattice& from_n, const H2Lattice& to_l, const H2Class& x);

/// c = 1/(2(l-1)) - (n/l)/(2(n-1)); throws for l < 2, l not dividing n, or n/l not triangular.
Rational obstruction_coefficient(int n, int l);

/// The delta_l^2 coefficient of S^2(phi^*) B_{M^[n]} - B_{M^[l]} with phi^* applied to
/// both tensor factors: 1/(2(l-1)) - (n/l)^2/(2(n-1)). Same preconditions.
Rational pullback_tensor_coefficient(int n, int l);

enum class Variance { covariant, contravariant };

/// Symmetric 2-tensor on V + Q*delta: a bilinear form (covariant) or an element of S^2 H^2 (contravariant).
struct Sym2Tensor {
  Matrix m;
  Variance variance = Variance::covariant;
};

Sym2Tensor bb_form(const H2Lattice& L);    // covariant gram
Sym2Tensor bb_tensor(const H2Lattice& L);  // contravariant inverse gram
Sym2Tensor d_squared(const H2Lattice& L);  // d(delta) = 1, d|_V = 0; covariant

/// S^2(phi^*) applied to a contravariant tensor on H^2(M^[n]).
Sym2Tensor pullback_tensor(const H2Lattice& from_n, const H2Lattice& to_l, const Sym2Tensor& t);

/// Three pairwise orthogonal classes of positive norm.
struct PeriodTriple {
  std::array<Vector, 3> w;
};

/// Throws std::invalid_argument if W is not pairwise orthogonal with positive norms.
void validate(const H2Lattice& L, const PeriodTriple& W);

/// Deterministic triple built from a rational diagonalization of the V form,
/// with a delta component on the first vector so that proj_W(delta) != 0.
PeriodTriple canonical_period_triple(const H2Lattice& L);

/// Random perturbation of the canonical triple, re-orthogonalized exactly.
/// With `orthogonal_to_delta` the triple lies in V.
PeriodTriple random_period_triple(const H2Lattice& L, std::mt19937_64& rng,
                                  bool orthogonal_to_delta = false);

/// Projection of delta onto span(W) is nonzero.
bool delta_projects_nontrivially(const H2Lattice& L, const PeriodTriple& W);

/// L_1 x = (x,w_2) w_3 - (x,w_3) w_2 and cyclically; as matrices acting on coordinate columns.
std::array<Matrix, 3> su2_generators(const H2Lattice& L, const PeriodTriple& W);

/// Derivation action of a generator on a symmetric 2-tensor.
Sym2Tensor act(const Matrix& generator, const Sym2Tensor& t);

bool is_su2_invariant(const H2Lattice& L, const Sym2Tensor& t, const PeriodTriple& W);

/// Dimension of the su(2)-module generated by the functional d.
std::size_t d_orbit_dimension(const H2Lattice& L, const PeriodTriple& W);

/// Dimension of the su(2)-module generated by d^2 (exact rank).
std::size_t orbit_dimension_d2(const H2Lattice& L, const PeriodTriple& W);

/// Basis of the module generated by d (row vectors as functionals).
std::vector<Vector> d_orbit_basis(const H2Lattice& L, const PeriodTriple& W);

/// Upper-triangular packing of a symmetric matrix, used for span computations.
Vector pack_symmetric(const Matrix& m);

}  // namespace hilbk3
