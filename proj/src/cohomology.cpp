#include "hilbk3/cohomology.hpp"

#include <stdexcept>

namespace hilbk3 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Betti number overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Betti number overflow");
  return r;
}

// C(b + k - 1, k): number of size-k multisets from b elements
std::int64_t multiset_count(std::int64_t b, int k) {
  if (k == 0) return 1;
  if (b == 0) return 0;
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = checked_mul(r, b + j - 1) / j;
  return r;
}

}  // namespace

PoincarePolynomial::PoincarePolynomial(std::vector<std::int64_t> betti) : betti_(std::move(betti)) {
  for (auto b : betti_)
    if (b < 0) throw std::invalid_argument("Betti numbers must be nonnegative");
  while (betti_.size() > 1 && betti_.back() == 0) betti_.pop_back();
}

std::int64_t PoincarePolynomial::operator[](int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return betti_[static_cast<std::size_t>(degree)];
}

std::int64_t PoincarePolynomial::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int i = 0; i <= top_degree(); ++i)
    chi = (i % 2 == 0) ? checked_add(chi, (*this)[i]) : checked_add(chi, -(*this)[i]);
  return chi;
}

bool PoincarePolynomial::satisfies_duality() const {
  const int top = top_degree();
  for (int i = 0; i <= top; ++i)
    if ((*this)[i] != (*this)[top - i]) return false;
  return true;
}

bool PoincarePolynomial::odd_degrees_vanish() const {
  for (int i = 1; i <= top_degree(); i += 2)
    if ((*this)[i] != 0) return false;
  return true;
}

PoincarePolynomial PoincarePolynomial::shifted(int degrees) const {
  if (degrees < 0) throw std::invalid_argument("negative cohomological shift");
  std::vector<std::int64_t> b(static_cast<std::size_t>(degrees), 0);
  b.insert(b.end(), betti_.begin(), betti_.end());
  return PoincarePolynomial(std::move(b));
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& o) const {
  std::vector<std::int64_t> b(betti_.size() + o.betti_.size() - 1, 0);
  for (std::size_t i = 0; i < betti_.size(); ++i)
    for (std::size_t j = 0; j < o.betti_.size(); ++j)
      b[i + j] = checked_add(b[i + j], checked_mul(betti_[i], o.betti_[j]));
  return PoincarePolynomial(std::move(b));
}

PoincarePolynomial PoincarePolynomial::operator+(const PoincarePolynomial& o) const {
  std::vector<std::int64_t> b(std::max(betti_.size(), o.betti_.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int d = static_cast<int>(i);
    b[i] = checked_add((*this)[d], o[d]);
  }
  return PoincarePolynomial(std::move(b));
}

std::string PoincarePolynomial::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < betti_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(betti_[i]);
  }
  return s + ")";
}

SurfaceBetti SurfaceBetti::make(std::int64_t b0, std::int64_t b2, std::int64_t b4) {
  if (b0 != 1 || b4 != 1)
    throw std::invalid_argument("surface must be connected and compact: b0 = b4 = 1");
  if (b2 < 0) throw std::invalid_argument("b2 must be nonnegative");
  return {b0, b2, b4};
}

SurfaceBetti SurfaceBetti::from_betti(std::span<const std::int64_t> betti) {
  if (betti.size() != 5) throw std::invalid_argument("surface Betti vector must have 5 entries");
  if (betti[1] != 0 || betti[3] != 0)
    throw std::invalid_argument("surfaces with odd cohomology are not supported");
  return make(betti[0], betti[2], betti[4]);
}

PoincarePolynomial SurfaceBetti::poincare() const { return PoincarePolynomial({b0, 0, b2, 0, b4}); }

PoincarePolynomial symmetric_power_poincare(const SurfaceBetti& s, int n) {
  if (n < 0) throw std::invalid_argument("symmetric power: n must be nonnegative");
  // Expand each factor (1 - q t^d)^(-b) = sum_k C(b+k-1,k) q^k t^(d k) and
  // multiply, tracking (q-degree, t-degree).
  const std::int64_t bs[3] = {s.b0, s.b2, s.b4};
  const int degs[3] = {0, 2, 4};
  // coeff[k][t] for q^k t^t
  std::vector<std::vector<std::int64_t>> acc(static_cast<std::size_t>(n) + 1,
                                             std::vector<std::int64_t>(4 * n + 1, 0));
  acc[0][0] = 1;
  for (int f = 0; f < 3; ++f) {
    std::vector<std::vector<std::int64_t>> next(acc.size(), std::vector<std::int64_t>(4 * n + 1, 0));
    for (int q = 0; q <= n; ++q)
      for (int t = 0; t <= 4 * n; ++t) {
        if (acc[q][t] == 0) continue;
        for (int k = 0; q + k <= n; ++k) {
          const int tt = t + degs[f] * k;
          if (tt > 4 * n) break;
          const std::int64_t c = multiset_count(bs[f], k);
          if (c == 0) continue;
          next[q + k][tt] = checked_add(next[q + k][tt], checked_mul(acc[q][t], c));
        }
      }
    acc = std::move(next);
  }
  return PoincarePolynomial(acc[static_cast<std::size_t>(n)]);
}

PoincarePolynomial diagonal_poincare(const SurfaceBetti& s, const YoungDiagram& alpha) {
  PoincarePolynomial p({1});
  for (int mult : refine(alpha).multiplicities) p = p * symmetric_power_poincare(s, mult);
  return p;
}

std::vector<const StratumContribution*> HilbertPoincare::contributions_in_degree(int degree) const {
  std::vector<const StratumContribution*> out;
  for (const auto& c : ledger)
    if (c.contribution[degree] != 0) out.push_back(&c);
  return out;
}

HilbertPoincare hilbert_poincare(const SurfaceBetti& s, int n) {
  if (n < 1) throw std::invalid_argument("hilbert_poincare: n must be positive");
  HilbertPoincare h;
  h.total = PoincarePolynomial({0});
  for (auto& alpha : partitions_of(n)) {
    // shift by the complex codimension; see the calibration note in README
    const int shift = codim_diagonal(alpha);
    PoincarePolynomial contribution = diagonal_poincare(s, alpha).shifted(shift);
    h.total = h.total + contribution;
    h.ledger.push_back({alpha, shift, std::move(contribution)});
  }
  return h;
}

SemismallReport verify_semismall(int n) {
  SemismallReport r;
  r.n = n;
  for (auto& alpha : partitions_of(n)) {
    SemismallRow row{alpha, fiber_dimension(alpha), codim_diagonal(alpha)};
    row.inequality_holds = 2 * row.fiber_dimension <= row.codimension;
    row.equality_holds = 2 * row.fiber_dimension == row.codimension;
    r.all_pass = r.all_pass && row.inequality_holds;
    r.all_equal = r.all_equal && row.equality_holds;
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace hilbk3
