#pragma once

// Obstruction computations that rule out every proper simple candidate for a
// trianalytic subvariety of M^[n].

#include <optional>
#include <string>
#include <vector>

#include "hilbk3/bb_lattice.hpp"
#include "hilbk3/partitions.hpp"

namespace hilbk3 {

/// True when f = B + 2(n-1) d^2 is not su(2)-invariant for the given triple, i.e.
/// the image of M under x -> (m_x)^k is not trianalytic. Requires L.n() > 1 triangular
/// and proj_W(delta) != 0.
bool h4_obstruction(const H2Lattice& L, const PeriodTriple& W);

struct CandidateVerdict {
  YoungDiagram diagram;
  CandidateKind kind;
  int copies = 0;  // l: number of parts
  std::string rule;
  std::optional<Rational> obstruction;              // c(n, l), l >= 2
  std::optional<Rational> tensor_coefficient;       // delta_l^2 coefficient of S^2(phi^*) B - B_l
  std::optional<bool> pullback_tensor_invariant;    // su(2)-invariance of S^2(phi^*) B on M^[l]
  std::optional<bool> weak_criterion;               // n - 1 != (n/l)(l - 1)
  std::optional<bool> h4;                           // l = 1
  bool obstructed = false;
  std::string verdict;
};

struct CertificationReport {
  int n = 0;
  std::vector<CandidateVerdict> candidates;
  std::vector<DiagramAudit> audit;
  std::size_t proper_simple = 0;
  std::size_t product_flags = 0;
  bool certified = false;
  std::string conclusion;
};

/// Runs the candidate pipeline for M^[n] and decides every candidate. The V form
/// defaults to the K3 lattice; period triples are the deterministic canonical ones.
CertificationReport certify_no_trianalytic(int n, const Matrix& gram_v = k3_lattice_gram());

}  // namespace hilbk3
