#pragma once

// Betti numbers of M^(n), of the diagonals, and of M^[n] through the
// semismall decomposition of the Hilbert-Chow morphism.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hilbk3/partitions.hpp"

namespace hilbk3 {

/// Betti numbers indexed by cohomological degree.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<std::int64_t> betti);

  const std::vector<std::int64_t>& betti() const { return betti_; }
  int top_degree() const { return static_cast<int>(betti_.size()) - 1; }
  /// Zero outside [0, top_degree].
  std::int64_t operator[](int degree) const;

  std::int64_t euler_characteristic() const;
  bool satisfies_duality() const;
  bool odd_degrees_vanish() const;

  PoincarePolynomial shifted(int degrees) const;
  PoincarePolynomial operator*(const PoincarePolynomial& o) const;  // Kunneth
  PoincarePolynomial operator+(const PoincarePolynomial& o) const;
  bool operator==(const PoincarePolynomial&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> betti_;
};

/// Compact surface with b1 = b3 = 0.
struct SurfaceBetti {
  std::int64_t b0 = 1;
  std::int64_t b2 = 22;
  std::int64_t b4 = 1;

  /// Default instance; b2(K3) = 22 is the standard value.
  static SurfaceBetti k3() { return {}; }
  /// Throws unless b0 = b4 = 1 and b2 >= 0.
  static SurfaceBetti make(std::int64_t b0, std::int64_t b2, std::int64_t b4);
  /// Full vector (b0,...,b4); rejects odd cohomology.
  static SurfaceBetti from_betti(std::span<const std::int64_t> betti);

  PoincarePolynomial poincare() const;
};

/// Coefficient of q^n in prod over even i of (1 - q t^i)^(-b_i).
PoincarePolynomial symmetric_power_poincare(const SurfaceBetti& s, int n);

/// Diagonal of M^(n): product of M^(n'_j) over the refinement multiplicities.
PoincarePolynomial diagonal_poincare(const SurfaceBetti& s, const YoungDiagram& alpha);

struct StratumContribution {
  YoungDiagram diagram;
  int shift = 0;                     // complex codimension of the diagonal
  PoincarePolynomial contribution;   // shifted Betti numbers of the diagonal
};

struct HilbertPoincare {
  PoincarePolynomial total;
  std::vector<StratumContribution> ledger;

  /// Ledger entries contributing nonzero in the given degree.
  std::vector<const StratumContribution*> contributions_in_degree(int degree) const;
};

/// b_i(M^[n]) = sum over alpha of b_{i - codim(alpha)}(diagonal). Requires n >= 1.
HilbertPoincare hilbert_poincare(const SurfaceBetti& s, int n);

struct SemismallRow {
  YoungDiagram diagram;
  int fiber_dimension = 0;
  int codimension = 0;
  bool inequality_holds = false;  // 2 * fiber <= codim
  bool equality_holds = false;
};

struct SemismallReport {
  int n = 0;
  std::vector<SemismallRow> rows;
  bool all_pass = true;
  bool all_equal = true;
};

SemismallReport verify_semismall(int n);

}  // namespace hilbk3
