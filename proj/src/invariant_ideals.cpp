#include "hilbk3/invariant_ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbk3 {

TruncatedRing::TruncatedRing(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("truncated ring: order must be positive");
  for (int l = 0; l < order; ++l)
    for (int a = l; a >= 0; --a) monomials_.emplace_back(a, l - a);
}

std::size_t TruncatedRing::index(int a, int b) const {
  const int l = a + b;
  if (a < 0 || b < 0 || l >= order_) throw std::out_of_range("monomial outside the truncated ring");
  return static_cast<std::size_t>(l * (l + 1) / 2 + (l - a));
}

std::pair<std::size_t, std::size_t> TruncatedRing::graded_piece(int l) const {
  if (l < 0 || l >= order_) throw std::out_of_range("graded piece outside the truncated ring");
  return {static_cast<std::size_t>(l * (l + 1) / 2), static_cast<std::size_t>(l + 1)};
}

Matrix TruncatedRing::multiplication(int a, int b) const {
  Matrix m(dim(), dim());
  for (std::size_t c = 0; c < dim(); ++c) {
    const auto [p, q] = monomials_[c];
    if (p + a + q + b < order_) m(index(p + a, q + b), c) = 1;
  }
  return m;
}

Sl2Action sl2_action(const TruncatedRing& ring) {
  const std::size_t n = ring.dim();
  Sl2Action s{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    const auto [a, b] = ring.monomials()[c];
    if (b > 0) s.e(ring.index(a + 1, b - 1), c) = b;
    if (a > 0) s.f(ring.index(a - 1, b + 1), c) = a;
    s.h(c, c) = a - b;
  }
  return s;
}

bool Sl2Action::brackets_hold() const {
  return e * f - f * e == h && h * e - e * h == e.scaled(2) && h * f - f * h == f.scaled(-2);
}

Matrix restrict_block(const Matrix& op, std::size_t offset, std::size_t size) {
  Matrix r(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) r(i, j) = op(offset + i, offset + j);
  return r;
}

std::size_t highest_weight_count(const Matrix& e) { return nullspace(e).rows(); }

bool irreducibility_certificate(const Matrix& e) { return highest_weight_count(e) == 1; }

bool irreducibility_certificate(int l, int N) {
  if (l < 0 || l >= N) throw std::invalid_argument("irreducibility_certificate: need 0 <= l < N");
  const TruncatedRing ring(N);
  const auto action = sl2_action(ring);
  const auto [offset, size] = ring.graded_piece(l);
  return irreducibility_certificate(restrict_block(action.e, offset, size));
}

bool is_ideal(const TruncatedRing& ring, const Matrix& basis_rows) {
  RowSpace span(ring.dim());
  for (std::size_t r = 0; r < basis_rows.rows(); ++r) span.insert(basis_rows.row(r));
  const Matrix mx = ring.multiplication(1, 0), my = ring.multiplication(0, 1);
  for (const auto& v : span.basis())
    if (!span.contains(mx * v) || !span.contains(my * v)) return false;
  return true;
}

std::vector<InvariantIdeal> classify_invariant_ideals(int N) {
  if (N < 2) throw std::invalid_argument("classify_invariant_ideals: N must be at least 2");
  const TruncatedRing ring(N);
  const auto action = sl2_action(ring);

  // (1) each A_l is irreducible, and the A_l are pairwise non-isomorphic (dimension l+1),
  // so invariant subspaces are exactly the sums of graded pieces.
  for (int l = 0; l < N; ++l) {
    const auto [offset, size] = ring.graded_piece(l);
    if (!irreducibility_certificate(restrict_block(action.e, offset, size)))
      throw std::logic_error("graded piece A_" + std::to_string(l) + " is reducible");
  }

  // (2) A_1 * A_l spans A_{l+1}
  const Matrix mx = ring.multiplication(1, 0), my = ring.multiplication(0, 1);
  for (int l = 0; l + 1 < N; ++l) {
    const auto [offset, size] = ring.graded_piece(l);
    RowSpace image(ring.dim());
    for (std::size_t k = 0; k < size; ++k) {
      image.insert(mx.col(offset + k));
      image.insert(my.col(offset + k));
    }
    if (image.dim() != static_cast<std::size_t>(l + 2))
      throw std::logic_error("A_1 * A_" + std::to_string(l) + " does not span A_" +
                             std::to_string(l + 1));
  }

  // (3) a sum over a degree set S is an ideal iff l in S, l+1 < N implies l+1 in S
  std::vector<InvariantIdeal> out;
  const unsigned pieces = static_cast<unsigned>(N - 1);  // A_0 excluded: proper ideals
  for (unsigned mask = 1; mask < (1u << pieces); ++mask) {
    std::vector<int> degrees;
    for (unsigned b = 0; b < pieces; ++b)
      if (mask & (1u << b)) degrees.push_back(static_cast<int>(b) + 1);
    bool closed = true;
    for (int l : degrees)
      if (l + 1 < N && std::find(degrees.begin(), degrees.end(), l + 1) == degrees.end())
        closed = false;
    if (!closed) continue;
    InvariantIdeal I;
    I.degrees = degrees;
    const bool interval = degrees.back() == N - 1 &&
                          degrees.back() - degrees.front() + 1 == static_cast<int>(degrees.size());
    I.power = interval ? degrees.front() : 0;
    out.push_back(std::move(I));
  }
  std::sort(out.begin(), out.end(),
            [](const InvariantIdeal& a, const InvariantIdeal& b) { return a.degrees.front() < b.degrees.front(); });
  return out;
}

bool MonomialIdeal::contains(int a, int b) const {
  if (a < 0 || b < 0) return false;
  if (b >= staircase.length()) return true;
  return a >= staircase.part(b + 1);
}

std::optional<int> MonomialIdeal::maximal_ideal_power() const {
  const auto& parts = staircase.parts();
  const int l = parts.front();
  if (static_cast<int>(parts.size()) != l) return std::nullopt;
  for (int b = 0; b < l; ++b)
    if (parts[static_cast<std::size_t>(b)] != l - b) return std::nullopt;
  return l;
}

MonomialIdeal monomial_ideal(const YoungDiagram& staircase) {
  MonomialIdeal I{staircase, {}};
  // corners: x^{lambda_{b+1}} y^b where the row is strictly shorter than the one above
  const auto& parts = staircase.parts();
  const int rows = staircase.length();
  for (int b = 0; b <= rows; ++b) {
    const int len = b < rows ? parts[static_cast<std::size_t>(b)] : 0;
    const int above = b == 0 ? -1 : parts[static_cast<std::size_t>(b - 1)];
    if (b == 0 || len < above) I.generators.emplace_back(len, b);
  }
  return I;
}

Matrix ideal_basis(const MonomialIdeal& I, const TruncatedRing& ring) {
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < ring.dim(); ++k) {
    const auto [a, b] = ring.monomials()[k];
    if (I.contains(a, b)) {
      Vector v = zero_vector(ring.dim());
      v[k] = 1;
      rows.push_back(std::move(v));
    }
  }
  if (rows.empty()) return Matrix(0, ring.dim());
  return Matrix::from_rows(rows);
}

std::vector<MonomialIdeal> punctual_fixed_points(int i) {
  if (i < 1) throw std::invalid_argument("punctual_fixed_points: colength must be positive");
  const TruncatedRing ring(i + 1);  // every colength-i monomial ideal contains m^i
  const auto action = sl2_action(ring);
  std::vector<MonomialIdeal> out;
  for (auto& lambda : partitions_of(i)) {
    MonomialIdeal I = monomial_ideal(lambda);
    std::vector<bool> member(ring.dim(), false);
    for (std::size_t k = 0; k < ring.dim(); ++k) {
      const auto [a, b] = ring.monomials()[k];
      member[k] = I.contains(a, b);
    }
    // the ideal is a coordinate subspace: op(U) is in U iff every column indexed
    // by U is supported on U
    auto stable = [&](const Matrix& op) {
      for (std::size_t c = 0; c < ring.dim(); ++c) {
        if (!member[c]) continue;
        for (std::size_t r = 0; r < ring.dim(); ++r)
          if (op(r, c) != 0 && !member[r]) return false;
      }
      return true;
    };
    if (stable(action.e) && stable(action.f)) out.push_back(std::move(I));
  }
  return out;
}

}  // namespace hilbk3
