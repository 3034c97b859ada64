#include "hilbk3/certify.hpp"

#include <stdexcept>

#include "hilbk3/frobenius.hpp"

namespace hilbk3 {

bool h4_obstruction(const H2Lattice& L, const PeriodTriple& W) {
  if (!delta_projects_nontrivially(L, W))
    throw std::invalid_argument("h4_obstruction: period triple must not be orthogonal to delta");
  return !is_su2_invariant(L, restriction_functional(L), W);
}

CertificationReport certify_no_trianalytic(int n, const Matrix& gram_v) {
  if (n < 2) throw std::invalid_argument("certify_no_trianalytic: n must be at least 2");
  const CandidateReport pipeline = trianalytic_candidates(n);
  CertificationReport report;
  report.n = n;
  report.audit = pipeline.audit;

  const H2Lattice Ln(n, gram_v);
  bool all_obstructed = true;
  for (const auto& cand : pipeline.survivors) {
    CandidateVerdict v{cand.diagram, cand.kind, cand.copies, {}, {}, {}, {}, {}, {}, false, {}};
    switch (cand.kind) {
      case CandidateKind::improper:
        v.rule = "X = M^[n]";
        v.verdict = "improper (the whole Hilbert scheme)";
        break;
      case CandidateKind::product:
        v.rule = "mixed parts: X ~ prod_j M^[k_j], so dim H^{2,0}(X) = #distinct parts > 1";
        v.verdict = "flagged: product case, not certified here";
        ++report.product_flags;
        break;
      case CandidateKind::simple: {
        ++report.proper_simple;
        const int l = cand.copies;
        if (l >= 2) {
          const H2Lattice Ll(l, gram_v);
          v.rule = "phi^* B_{M^[n]} = B_{M^[l]} + c [Delta_l]^2, c = 1/(2(l-1)) - (n/l)/(2(n-1))";
          v.obstruction = obstruction_coefficient(n, l);
          v.tensor_coefficient = pullback_tensor_coefficient(n, l);
          const Sym2Tensor pulled = pullback_tensor(Ln, Ll, bb_tensor(Ln));
          v.pullback_tensor_invariant = is_su2_invariant(Ll, pulled, canonical_period_triple(Ll));
          const int t = n / l;
          v.weak_criterion = (n - 1) != t * (l - 1);
          v.obstructed = *v.obstruction != 0 && *v.tensor_coefficient != 0 &&
                         !*v.pullback_tensor_invariant;
        } else {
          v.rule = "f = B + 2(n-1) d^2 on S^2 H^2(M^[n]) must be su(2)-invariant";
          v.h4 = h4_obstruction(Ln, canonical_period_triple(Ln));
          v.obstructed = *v.h4;
        }
        v.verdict = v.obstructed ? "obstructed: not trianalytic" : "NOT obstructed";
        all_obstructed = all_obstructed && v.obstructed;
        break;
      }
    }
    report.candidates.push_back(std::move(v));
  }

  report.certified = all_obstructed;
  if (!report.certified) {
    report.conclusion = "not certified: some simple candidate is unobstructed";
  } else if (report.proper_simple == 0) {
    report.conclusion = "certified: no proper simple candidates";
  } else {
    report.conclusion = "certified: every proper simple candidate is obstructed";
  }
  if (report.product_flags > 0)
    report.conclusion += "; " + std::to_string(report.product_flags) + " product case(s) flagged";
  return report;
}

}  // namespace hilbk3
