#include "hilbk3/bb_lattice.hpp"

#include <stdexcept>
#include <string>

#include "hilbk3/partitions.hpp"

namespace hilbk3 {

namespace {

Matrix e8_cartan() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4
  Matrix c(8, 8);
  for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2;
  const std::pair<std::size_t, std::size_t> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5},
                                                       {5, 6}, {6, 7}, {1, 3}};
  for (auto [a, b] : edges) c(a, b) = c(b, a) = -1;
  return c;
}

Matrix hyperbolic_plane() {
  Matrix u(2, 2);
  u(0, 1) = u(1, 0) = 1;
  return u;
}

Matrix outer(const Vector& a, const Vector& b) {
  Matrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) m(i, j) = a[i] * b[j];
  }
  return m;
}

void check_pullback_pair(int n, int l) {
  if (l < 1 || n < l || n % l != 0)
    throw std::invalid_argument("pullback requires l | n (n=" + std::to_string(n) +
                                ", l=" + std::to_string(l) + ")");
  if (!is_triangular(n / l))
    throw std::invalid_argument("pullback requires n/l triangular (n/l=" + std::to_string(n / l) +
                                ")");
}

Vector axpy(const Vector& x, const Rational& a, const Vector& y) {
  Vector r = x;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (y[i] != 0) r[i] += a * y[i];
  return r;
}

}  // namespace

Matrix k3_lattice_gram() {
  const Matrix e8m = e8_cartan().scaled(-1);
  Matrix g = Matrix::direct_sum(e8m, e8m);
  for (int i = 0; i < 3; ++i) g = Matrix::direct_sum(g, hyperbolic_plane());
  return g;
}

FormSignature signature(const Matrix& gram) {
  auto d = diagonalize_form(gram);
  return {d.positive, d.negative, d.zero};
}

H2Lattice::H2Lattice(int n, Matrix gram) : n_(n), gram_(std::move(gram)) {
  if (n_ < 1) throw std::invalid_argument("H2Lattice: n must be positive");
  if (!gram_.is_square() || gram_.rows() == 0)
    throw std::invalid_argument("H2Lattice: gram must be a nonempty square matrix");
  if (!gram_.is_symmetric()) throw std::invalid_argument("H2Lattice: gram must be symmetric");
  if (determinant(gram_) == 0) throw std::invalid_argument("H2Lattice: gram is degenerate");
  full_ = gram_;
  if (has_delta()) {
    Matrix d(1, 1);
    d(0, 0) = delta_norm();
    full_ = Matrix::direct_sum(gram_, d);
  }
}

H2Class H2Class::delta(const H2Lattice& L) {
  if (!L.has_delta()) throw std::invalid_argument("H^2(M) has no delta class");
  return {zero_vector(L.dim_v()), 1};
}

Vector H2Class::coords(const H2Lattice& L) const {
  if (v_part.size() != L.dim_v()) throw std::invalid_argument("H2Class: dimension mismatch");
  if (!L.has_delta() && delta_coeff != 0)
    throw std::invalid_argument("H2Class: delta component on a lattice without delta");
  Vector c = v_part;
  if (L.has_delta()) c.push_back(delta_coeff);
  return c;
}

H2Class H2Class::from_coords(const H2Lattice& L, const Vector& c) {
  if (c.size() != L.dim()) throw std::invalid_argument("H2Class: dimension mismatch");
  H2Class x;
  x.v_part.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(L.dim_v()));
  x.delta_coeff = L.has_delta() ? c.back() : Rational(0);
  return x;
}

Rational bb_pair(const H2Lattice& L, const H2Class& x, const H2Class& y) {
  return bb_pair_coords(L, x.coords(L), y.coords(L));
}

Rational bb_pair_coords(const H2Lattice& L, const Vector& x, const Vector& y) {
  if (x.size() != L.dim() || y.size() != L.dim())
    throw std::invalid_argument("bb_pair: dimension mismatch");
  return dot(x, L.full_gram() * y);
}

Matrix pullback_matrix(const H2Lattice& from_n, const H2Lattice& to_l) {
  check_pullback_pair(from_n.n(), to_l.n());
  if (!(from_n.gram_v() == to_l.gram_v()))
    throw std::invalid_argument("pullback: lattices must share H^2(M)");
  Matrix p(to_l.dim(), from_n.dim());
  for (std::size_t i = 0; i < from_n.dim_v(); ++i) p(i, i) = 1;
  if (from_n.has_delta() && to_l.has_delta())
    p(to_l.delta_index(), from_n.delta_index()) = Rational(from_n.n() / to_l.n());
  return p;
}

H2Class pullback(const H2Lattice& from_n, const H2Lattice& to_l, const H2Class& x) {
  return H2Class::from_coords(to_l, pullback_matrix(from_n, to_l) * x.coords(from_n));
}

Rational obstruction_coefficient(int n, int l) {
  if (l < 2) throw std::invalid_argument("obstruction_coefficient: l must be at least 2");
  check_pullback_pair(n, l);
  const Rational t(n / l);
  return Rational(1, 2 * (l - 1)) - t / Rational(2 * (n - 1));
}

Rational pullback_tensor_coefficient(int n, int l) {
  if (l < 2) throw std::invalid_argument("pullback_tensor_coefficient: l must be at least 2");
  check_pullback_pair(n, l);
  const Rational t(n / l);
  return Rational(1, 2 * (l - 1)) - t * t / Rational(2 * (n - 1));
}

Sym2Tensor bb_form(const H2Lattice& L) { return {L.full_gram(), Variance::covariant}; }

Sym2Tensor bb_tensor(const H2Lattice& L) {
  return {*inverse(L.full_gram()), Variance::contravariant};
}

Sym2Tensor d_squared(const H2Lattice& L) {
  if (!L.has_delta()) throw std::invalid_argument("d^2 needs a delta class");
  Matrix m(L.dim(), L.dim());
  m(L.delta_index(), L.delta_index()) = 1;
  return {m, Variance::covariant};
}

Sym2Tensor pullback_tensor(const H2Lattice& from_n, const H2Lattice& to_l, const Sym2Tensor& t) {
  if (t.variance != Variance::contravariant)
    throw std::invalid_argument("pullback_tensor: only contravariant tensors push along phi^*");
  const Matrix p = pullback_matrix(from_n, to_l);
  return {p * t.m * p.transpose(), Variance::contravariant};
}

void validate(const H2Lattice& L, const PeriodTriple& W) {
  for (const auto& w : W.w)
    if (w.size() != L.dim()) throw std::invalid_argument("period triple: dimension mismatch");
  for (int a = 0; a < 3; ++a) {
    if (bb_pair_coords(L, W.w[a], W.w[a]) <= 0)
      throw std::invalid_argument("period triple: norms must be positive");
    for (int b = a + 1; b < 3; ++b)
      if (bb_pair_coords(L, W.w[a], W.w[b]) != 0)
        throw std::invalid_argument("period triple: vectors must be orthogonal");
  }
}

PeriodTriple canonical_period_triple(const H2Lattice& L) {
  const auto diag = diagonalize_form(L.gram_v());
  std::vector<Vector> positive;
  std::vector<Rational> positive_norms;
  for (std::size_t i = 0; i < diag.norms.size() && positive.size() < 3; ++i)
    if (diag.norms[i] > 0) {
      positive.push_back(diag.basis.row(i));
      positive_norms.push_back(diag.norms[i]);
    }
  if (positive.size() < 3)
    throw std::invalid_argument("H^2(M) form has fewer than three positive directions");

  PeriodTriple W;
  for (int a = 0; a < 3; ++a) {
    W.w[a] = positive[a];
    if (L.has_delta()) W.w[a].push_back(0);
  }
  if (L.has_delta()) {
    // tilt w_1 toward delta while keeping it positive
    const Rational q = positive_norms[0];
    for (int m = 1;; ++m) {
      const Rational s(1, m);
      if (q + L.delta_norm() * s * s > 0) {
        W.w[0][L.delta_index()] = s;
        break;
      }
    }
  }
  validate(L, W);
  return W;
}

PeriodTriple random_period_triple(const H2Lattice& L, std::mt19937_64& rng, bool orthogonal_to_delta) {
  const PeriodTriple base = canonical_period_triple(L);
  std::uniform_int_distribution<int> sparse(0, 3);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> delta_entry(1, 3);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::array<Vector, 3> x;
    for (int a = 0; a < 3; ++a) {
      x[a] = base.w[a];
      if (L.has_delta()) x[a][L.delta_index()] = 0;
      for (auto& c : x[a]) c *= 6;
      for (std::size_t i = 0; i < L.dim_v(); ++i)
        if (sparse(rng) == 0) x[a][i] += entry(rng);
      if (L.has_delta() && !orthogonal_to_delta && (a == 0 || sparse(rng) == 0))
        x[a][L.delta_index()] = Rational(delta_entry(rng) * (entry(rng) < 0 ? -1 : 1), 2);
        x[a][L.delta_index()].canonicalize();
    }
    PeriodTriple W;
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a) {
      Vector v = x[a];
      for (int b = 0; b < a; ++b)
        v = axpy(v, -bb_pair_coords(L, v, W.w[b]) / bb_pair_coords(L, W.w[b], W.w[b]), W.w[b]);
      if (bb_pair_coords(L, v, v) <= 0) ok = false;
      W.w[a] = std::move(v);
    }
    if (!ok) continue;
    if (L.has_delta() && !orthogonal_to_delta && !delta_projects_nontrivially(L, W)) continue;
    validate(L, W);
    return W;
  }
  throw std::runtime_error("random_period_triple: no positive triple found");
}

bool delta_projects_nontrivially(const H2Lattice& L, const PeriodTriple& W) {
  if (!L.has_delta()) return false;
  Vector delta = zero_vector(L.dim());
  delta[L.delta_index()] = 1;
  for (const auto& w : W.w)
    if (bb_pair_coords(L, delta, w) != 0) return true;
  return false;
}

std::array<Matrix, 3> su2_generators(const H2Lattice& L, const PeriodTriple& W) {
  validate(L, W);
  const Matrix g = L.full_gram();
  std::array<Vector, 3> gw;  // G w_a, so that (x, w_a) = (G w_a) . x
  for (int a = 0; a < 3; ++a) gw[a] = g * W.w[a];
  std::array<Matrix, 3> gens;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    gens[a] = outer(W.w[c], gw[b]) - outer(W.w[b], gw[c]);
  }
  return gens;
}

Sym2Tensor act(const Matrix& gen, const Sym2Tensor& t) {
  if (t.variance == Variance::covariant)
    return {(gen.transpose() * t.m + t.m * gen).scaled(-1), t.variance};
  return {gen * t.m + t.m * gen.transpose(), t.variance};
}

bool is_su2_invariant(const H2Lattice& L, const Sym2Tensor& t, const PeriodTriple& W) {
  if (t.m.rows() != L.dim() || t.m.cols() != L.dim())
    throw std::invalid_argument("is_su2_invariant: tensor/lattice dimension mismatch");
  for (const auto& gen : su2_generators(L, W))
    if (!act(gen, t).m.is_zero()) return false;
  return true;
}

Vector pack_symmetric(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * (m.rows() + 1) / 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

std::vector<Vector> d_orbit_basis(const H2Lattice& L, const PeriodTriple& W) {
  if (!L.has_delta()) throw std::invalid_argument("d needs a delta class");
  const auto gens = su2_generators(L, W);
  Vector d = zero_vector(L.dim());
  d[L.delta_index()] = 1;
  RowSpace span(L.dim());
  std::vector<Vector> frontier{d}, members;
  span.insert(d);
  members.push_back(d);
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& f : frontier)
      for (const auto& gen : gens) {
        Vector g = f * gen;
        if (span.insert(g)) {
          members.push_back(g);
          next.push_back(std::move(g));
        }
      }
    frontier = std::move(next);
  }
  return members;
}

std::size_t d_orbit_dimension(const H2Lattice& L, const PeriodTriple& W) {
  return d_orbit_basis(L, W).size();
}

std::size_t orbit_dimension_d2(const H2Lattice& L, const PeriodTriple& W) {
  const auto gens = su2_generators(L, W);
  const Sym2Tensor start = d_squared(L);
  RowSpace span(L.dim() * (L.dim() + 1) / 2);
  span.insert(pack_symmetric(start.m));
  std::vector<Sym2Tensor> frontier{start};
  while (!frontier.empty()) {
    std::vector<Sym2Tensor> next;
    for (const auto& t : frontier)
      for (const auto& gen : gens) {
        Sym2Tensor moved = act(gen, t);
        if (span.insert(pack_symmetric(moved.m))) next.push_back(std::move(moved));
      }
    frontier = std::move(next);
  }
  return span.dim();
}

}  // namespace hilbk3
