#include "hilbk3/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hilbk3 {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Young diagram must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Young diagram parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Young diagram parts must be weakly decreasing");
  }
}

YoungDiagram::YoungDiagram(std::vector<int> parts, int n) : YoungDiagram(std::move(parts)) {
  if (weight() != n)
    throw std::invalid_argument("Young diagram " + to_string() + " does not have weight " +
                                std::to_string(n));
}

int YoungDiagram::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool YoungDiagram::is_trivial() const { return parts_.front() == 1; }

bool YoungDiagram::has_equal_parts() const { return parts_.front() == parts_.back(); }

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

YoungDiagram Refinement::reconstruct() const {
  std::vector<int> parts;
  for (std::size_t j = 0; j < distinct_values.size(); ++j)
    parts.insert(parts.end(), static_cast<std::size_t>(multiplicities.at(j)), distinct_values[j]);
  return YoungDiagram(std::move(parts));
}

Refinement refine(const YoungDiagram& alpha) {
  Refinement r;
  for (int p : alpha.parts()) {
    if (r.distinct_values.empty() || r.distinct_values.back() != p) {
      r.distinct_values.push_back(p);
      r.multiplicities.push_back(1);
    } else {
      ++r.multiplicities.back();
    }
  }
  return r;
}

int codim_diagonal(const YoungDiagram& alpha) {
  int s = 0;
  for (int p : alpha.parts()) s += p - 1;
  return 2 * s;
}

int fiber_dimension(const YoungDiagram& alpha) {
  // product of punctual fibers F_0(n_i), each of dimension n_i - 1
  int s = 0;
  for (int p : alpha.parts()) s += p - 1;
  return s;
}

std::optional<int> triangular_root(long long m) {
  if (m < 1) return std::nullopt;
  auto l = static_cast<long long>(std::floor((std::sqrt(8.0L * m + 1) - 1) / 2));
  for (long long c = std::max(1LL, l - 1); c <= l + 1; ++c)
    if (c * (c + 1) / 2 == m) return static_cast<int>(c);
  return std::nullopt;
}

bool is_triangular(long long m) { return triangular_root(m).has_value(); }

std::vector<YoungDiagram> enumerate_universal_reldim0(int n) {
  std::vector<YoungDiagram> out;
  for (auto& alpha : partitions_of(n)) {
    const auto& parts = alpha.parts();
    if (std::all_of(parts.begin(), parts.end(), [](int p) { return is_triangular(p); }))
      out.push_back(alpha);
  }
  return out;
}

SpecialShape::SpecialShape(YoungDiagram d, std::vector<int> fixed)
    : diagram(std::move(d)), fixed_indices(std::move(fixed)) {
  std::sort(fixed_indices.begin(), fixed_indices.end());
  if (std::adjacent_find(fixed_indices.begin(), fixed_indices.end()) != fixed_indices.end())
    throw std::invalid_argument("special shape: repeated fixed index");
  for (int i : fixed_indices)
    if (i < 1 || i > diagram.length())
      throw std::invalid_argument("special shape: fixed index out of range");
}

int special_dimension(const SpecialShape& shape) {
  return 2 * (shape.diagram.length() - static_cast<int>(shape.fixed_indices.size()));
}

int deformation_dimension(const SpecialShape& shape) {
  int d = 0;
  for (int i : shape.fixed_indices) d += 2 + (shape.diagram.part(i) - 1);
  return d;
}

std::vector<SpecialShape> special_shapes(int n) {
  std::vector<SpecialShape> out;
  for (auto& alpha : partitions_of(n)) {
    const int k = alpha.length();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> fixed;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) fixed.push_back(i + 1);
      out.emplace_back(alpha, std::move(fixed));
    }
  }
  return out;
}

void NaturalShape::canonicalize() {
  std::vector<std::pair<std::vector<int>, bool>> tagged;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto blk = blocks[b];
    std::sort(blk.begin(), blk.end());
    tagged.emplace_back(std::move(blk), fixed.at(b));
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
  blocks.clear();
  fixed.clear();
  for (auto& [blk, f] : tagged) {
    blocks.push_back(std::move(blk));
    fixed.push_back(f);
  }
}

std::string NaturalShape::to_string() const {
  std::string s;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += ' ';
    s += '{';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(blocks[b][i]);
    }
    s += '}';
    if (fixed[b]) s += '*';
  }
  return s;
}

std::vector<NaturalShape> natural_shapes(int n) {
  if (n < 1) throw std::invalid_argument("natural_shapes: n must be positive");
  std::vector<NaturalShape> out;
  // restricted growth strings enumerate set partitions
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  while (true) {
    const int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[i])].push_back(i + 1);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      NaturalShape s;
      s.blocks = blocks;
      for (int b = 0; b < k; ++b) s.fixed.push_back((mask >> b) & 1u);
      s.canonicalize();
      out.push_back(std::move(s));
    }
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= prefix_max) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NaturalShape> natural_shapes_by_grammar(int n) {
  if (n < 1) throw std::invalid_argument("natural_shapes_by_grammar: n must be positive");
  std::set<NaturalShape> level{NaturalShape{{{1}}, {false}}, NaturalShape{{{1}}, {true}}};
  for (int m = 1; m < n; ++m) {
    std::set<NaturalShape> next;
    const int fresh = m + 1;
    for (const auto& z : level) {
      NaturalShape times_m = z;  // Z x M
      times_m.blocks.push_back({fresh});
      times_m.fixed.push_back(false);
      times_m.canonicalize();
      next.insert(times_m);

      NaturalShape times_point = z;  // Z x {t}
      times_point.blocks.push_back({fresh});
      times_point.fixed.push_back(true);
      times_point.canonicalize();
      next.insert(times_point);

      for (int i = 1; i <= m; ++i) {  // m_i = m_{n+1}
        NaturalShape diag = z;
        for (auto& blk : diag.blocks)
          if (std::find(blk.begin(), blk.end(), i) != blk.end()) blk.push_back(fresh);
        diag.canonicalize();
        next.insert(diag);
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::string to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::improper: return "improper";
    case CandidateKind::simple: return "simple";
    case CandidateKind::product: return "product";
  }
  return "unknown";
}

CandidateReport trianalytic_candidates(int n) {
  if (n < 2) throw std::invalid_argument("trianalytic_candidates: n must be at least 2");
  CandidateReport report;
  report.n = n;

  for (auto& alpha : partitions_of(n)) {
    DiagramAudit audit{alpha};
    std::vector<SpecialShape> shapes;
    const int k = alpha.length();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> fixed;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) fixed.push_back(i + 1);
      shapes.emplace_back(alpha, std::move(fixed));
    }
    audit.shapes_total = static_cast<int>(shapes.size());

    // (1) pinned parts of a trianalytic special subvariety have n_i = 1
    std::erase_if(shapes, [](const SpecialShape& s) {
      return std::any_of(s.fixed_indices.begin(), s.fixed_indices.end(),
                         [&](int i) { return s.diagram.part(i) != 1; });
    });
    audit.after_pinned_parts_rule = static_cast<int>(shapes.size());

    // (2) non-degenerate symplectic restriction forces A empty
    std::erase_if(shapes, [](const SpecialShape& s) { return !s.is_universal(); });
    audit.after_universal_rule = static_cast<int>(shapes.size());

    // (3) relative dimension 0 requires triangular parts
    const auto& parts = alpha.parts();
    audit.triangular_parts =
        std::all_of(parts.begin(), parts.end(), [](int p) { return is_triangular(p); });
    audit.survives = audit.after_universal_rule > 0 && audit.triangular_parts;

    if (audit.survives) {
      TrianalyticCandidate c{alpha, CandidateKind::improper, k, 0, {}};
      if (alpha.is_trivial()) {
        c.kind = CandidateKind::improper;
        c.part_value = 1;
        c.note = "X = M^[n] itself";
      } else if (alpha.has_equal_parts()) {
        c.kind = CandidateKind::simple;
        c.part_value = alpha.part(1);
        c.note = "equal parts: simple candidate birational to M^[" + std::to_string(k) + "]";
      } else {
        c.kind = CandidateKind::product;
        c.note =
            "mixed parts: birational to a product of Hilbert schemes, dim H^{2,0} > 1, "
            "excluded as a product case";
      }
      report.survivors.push_back(std::move(c));
    }
    report.audit.push_back(std::move(audit));
  }
  return report;
}

}  // namespace hilbk3
