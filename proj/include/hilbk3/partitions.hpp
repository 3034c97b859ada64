#pragma once

// Young-diagram combinatorics of the diagonal stratification of M^(n), the
// special/universal subvariety shapes built on it, and the filter pipeline
// that reduces trianalytic subvarieties of M^[n] to a short candidate list.

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hilbk3 {

/// Weakly decreasing sequence of positive parts n_1 >= ... >= n_k.
class YoungDiagram {
 public:
  /// Throws std::invalid_argument unless parts are nonempty, positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> parts);
  /// Same, additionally requiring the parts to sum to `n`.
  YoungDiagram(std::vector<int> parts, int n);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int index) const { return parts_.at(static_cast<std::size_t>(index - 1)); }  // 1-based

  bool is_trivial() const;          // (1,...,1)
  bool has_equal_parts() const;     // n_1 = ... = n_k
  std::string to_string() const;    // "(3,1,1)"

  auto operator<=>(const YoungDiagram&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, largest first part first: (n), (n-1,1), ..., (1^n).
std::vector<YoungDiagram> partitions_of(int n);

/// Run-length encoding of the parts.
struct Refinement {
  std::vector<int> distinct_values;  // strictly decreasing
  std::vector<int> multiplicities;   // n'_j

  YoungDiagram reconstruct() const;
};

Refinement refine(const YoungDiagram& alpha);

/// Complex codimension of the diagonal in M^(n): 2 * sum(n_i - 1).
int codim_diagonal(const YoungDiagram& alpha);

/// Dimension of the Hilbert-Chow fiber over a general point of the diagonal,
/// using dim F_0(m) = m - 1 for the punctual fiber.
int fiber_dimension(const YoungDiagram& alpha);

/// l with m = l(l+1)/2, if any.
std::optional<int> triangular_root(long long m);
bool is_triangular(long long m);

/// Partitions of n with every part triangular, one per universal subvariety of relative dimension 0.
std::vector<YoungDiagram> enumerate_universal_reldim0(int n);

/// Diagonal with a subset A of its parts pinned to labelled points.
struct SpecialShape {
  SpecialShape(YoungDiagram diagram, std::vector<int> fixed_indices);

  YoungDiagram diagram;
  std::vector<int> fixed_indices;  // sorted, 1-based, subset of {1..k}

  bool is_universal() const { return fixed_indices.empty(); }
};

int special_dimension(const SpecialShape& shape);
int deformation_dimension(const SpecialShape& shape);

/// Every (alpha, A) with alpha a partition of n and A any subset of part indices.
std::vector<SpecialShape> special_shapes(int n);

/// Natural subvariety of M^n as a marked set partition of {1..n}: coordinates in
/// one block coincide; a fixed block sits at a labelled point, a free block moves.
struct NaturalShape {
  std::vector<std::vector<int>> blocks;  // canonical: sorted inside, blocks ordered by minimum
  std::vector<bool> fixed;               // one flag per block

  void canonicalize();
  std::string to_string() const;  // e.g. "{1,3}*{2}" with * marking fixed blocks
  auto operator<=>(const NaturalShape&) const = default;
};

/// Marked set partitions of {1..n}, canonical and sorted.
std::vector<NaturalShape> natural_shapes(int n);

/// Closure of the recursive grammar starting from {M, point} in M^1 and
/// extending by Z x M, Z x {t}, or the diagonal m_i = m_{n+1}; canonical and sorted.
std::vector<NaturalShape> natural_shapes_by_grammar(int n);

enum class CandidateKind { improper, simple, product };

std::string to_string(CandidateKind kind);

/// Fate of one diagram through the pipeline.
struct DiagramAudit {
  YoungDiagram diagram;
  int shapes_total = 0;            // 2^k choices of A
  int after_pinned_parts_rule = 0;  // A restricted to parts with n_i = 1
  int after_universal_rule = 0;     // A empty
  bool triangular_parts = false;
  bool survives = false;
};

struct TrianalyticCandidate {
  YoungDiagram diagram;
  CandidateKind kind;
  int copies = 0;      // k = number of parts; X is birational to M^[k] in the simple case
  int part_value = 0;  // common part value n/k (simple and improper only)
  std::string note;
};

struct CandidateReport {
  int n = 0;
  std::vector<TrianalyticCandidate> survivors;
  std::vector<DiagramAudit> audit;
};

/// Requires n >= 2.
CandidateReport trianalytic_candidates(int n);

}  // namespace hilbk3
