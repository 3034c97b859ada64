#include "hilbk3/frobenius.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "hilbk3/partitions.hpp"

namespace hilbk3 {

namespace {

void exponents_rec(std::size_t var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[var] = a;
    exponents_rec(var + 1, remaining - a, cur, out);
  }
  cur[var] = 0;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

}  // namespace

SymSpace::SymSpace(std::size_t dim_v, int degree) : dim_v_(dim_v), degree_(degree) {
  if (dim_v == 0) throw std::invalid_argument("SymSpace: dim V must be positive");
  if (degree < 0) throw std::invalid_argument("SymSpace: negative degree");
  Exponent cur(dim_v, 0);
  exponents_rec(0, degree, cur, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], i);
}

std::size_t SymSpace::index(const Exponent& e) const {
  auto it = lookup_.find(e);
  if (it == lookup_.end()) throw std::out_of_range("SymSpace: monomial not in this degree");
  return it->second;
}

std::size_t sym_dimension(std::size_t dim_v, int d) {
  if (d < 0) return 0;
  std::size_t r = 1;
  for (int j = 1; j <= d; ++j) r = r * (dim_v + static_cast<std::size_t>(j) - 1) / static_cast<std::size_t>(j);
  return r;
}

Vector sym_multiply(const SymSpace& a, const Vector& x, const SymSpace& b, const Vector& y,
                    const SymSpace& out) {
  if (out.degree() != a.degree() + b.degree())
    throw std::invalid_argument("sym_multiply: output degree mismatch");
  Vector r = zero_vector(out.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (y[j] == 0) continue;
      r[out.index(add(a.monomials()[i], b.monomials()[j]))] += x[i] * y[j];
    }
  }
  return r;
}

Vector linear_power(const Vector& alpha, const SymSpace& out) {
  if (alpha.size() != out.dim_v()) throw std::invalid_argument("linear_power: dimension mismatch");
  SymSpace one(out.dim_v(), 1);
  Vector acc{Rational(1)};
  for (int k = 1; k <= out.degree(); ++k) {
    SymSpace prev(out.dim_v(), k - 1), cur(out.dim_v(), k);
    acc = sym_multiply(prev, acc, one, alpha, cur);
  }
  return acc;
}

Matrix laplacian_matrix(const Matrix& gram, int d) {
  if (d < 2) throw std::invalid_argument("laplacian: degree must be at least 2");
  const std::size_t n = gram.rows();
  SymSpace src(n, d), dst(n, d - 2);
  Matrix lap(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const Exponent& m = src.monomials()[col];
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] >= 2 && gram(i, i) != 0) {
        Exponent e = m;
        e[i] -= 2;
        lap(dst.index(e), col) += gram(i, i) * (m[i] * (m[i] - 1));
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (m[i] >= 1 && m[j] >= 1 && gram(i, j) != 0) {
          Exponent e = m;
          --e[i];
          --e[j];
          lap(dst.index(e), col) += 2 * gram(i, j) * (m[i] * m[j]);
        }
      }
    }
  }
  return lap;
}

Vector laplacian(const Matrix& gram, int d, const Vector& x) { return laplacian_matrix(gram, d) * x; }

Matrix harmonic_part(const Matrix& gram, int d) {
  if (d < 2) return Matrix::identity(sym_dimension(gram.rows(), d));
  return nullspace(laplacian_matrix(gram, d));
}

std::size_t harmonic_dimension(const Matrix& gram, int d) {
  const std::size_t total = sym_dimension(gram.rows(), d);
  if (d < 2) return total;
  return total - rank(laplacian_matrix(gram, d));
}

Vector quadric(const Matrix& gram) {
  auto inv = inverse(gram);
  if (!inv) throw std::invalid_argument("quadric: degenerate gram");
  const std::size_t n = gram.rows();
  SymSpace s2(n, 2);
  Vector q = zero_vector(s2.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponent e(n, 0);
      ++e[i];
      ++e[j];
      q[s2.index(e)] += (*inv)(i, j);
    }
  return q;
}

Matrix substitution_matrix(const Matrix& g, int d) {
  const std::size_t n = g.rows();
  SymSpace target(n, d), one(n, 1);
  Matrix out(target.size(), target.size());
  std::vector<Vector> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = g.col(j);
  for (std::size_t col = 0; col < target.size(); ++col) {
    const Exponent& m = target.monomials()[col];
    Vector acc{Rational(1)};
    int deg = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (int p = 0; p < m[j]; ++p) {
        SymSpace prev(n, deg), cur(n, deg + 1);
        acc = sym_multiply(prev, acc, one, images[j], cur);
        ++deg;
      }
    for (std::size_t row = 0; row < target.size(); ++row) out(row, col) = acc[row];
  }
  return out;
}

std::vector<std::size_t> frobenius_dimension_pattern(std::size_t dim_v, int n) {
  std::vector<std::size_t> dims;
  for (int i = 0; i <= 2 * n; ++i) dims.push_back(sym_dimension(dim_v, std::min(i, 2 * n - i)));
  return dims;
}

FrobeniusAlgebra FrobeniusAlgebra::build(const Matrix& gram, int n, bool with_tables) {
  if (n < 1) throw std::invalid_argument("A(V,n): n must be positive");
  if (!gram.is_square() || gram.rows() == 0 || !gram.is_symmetric())
    throw std::invalid_argument("A(V,n): gram must be a nonempty symmetric matrix");
  if (determinant(gram) == 0) throw std::invalid_argument("A(V,n): gram is degenerate");

  FrobeniusAlgebra A(gram, n);
  const std::size_t dv = gram.rows();
  const int last = 2 * n + 1;
  for (int d = 0; d <= last; ++d) {
    A.sym_.emplace_back(dv, d);
    A.ideal_.emplace_back(A.sym_.back().size());
  }

  // generators: harmonic polynomials of degree n + 1
  const Matrix gens = harmonic_part(gram, n + 1);
  for (std::size_t r = 0; r < gens.rows(); ++r) A.ideal_[n + 1].insert(gens.row(r));

  const SymSpace one(dv, 1);
  for (int d = n + 1; d < last; ++d) {
    for (const auto& b : A.ideal_[d].basis())
      for (std::size_t k = 0; k < dv; ++k) {
        Vector ek = zero_vector(dv);
        ek[k] = 1;
        A.ideal_[d + 1].insert(sym_multiply(A.sym_[d], b, one, ek, A.sym_[d + 1]));
      }
  }

  for (int d = 0; d <= last; ++d) {
    std::vector<bool> pivot(A.sym_[d].size(), false);
    for (auto p : A.ideal_[d].pivots()) pivot[p] = true;
    std::vector<std::size_t> std_monomials;
    for (std::size_t c = 0; c < pivot.size(); ++c)
      if (!pivot[c]) std_monomials.push_back(c);
    A.standard_.push_back(std::move(std_monomials));
  }

  const auto expected = frobenius_dimension_pattern(dv, n);
  for (int i = 0; i <= 2 * n; ++i)
    if (A.dim(i) != expected[static_cast<std::size_t>(i)])
      throw std::runtime_error("A(V,n) construction failure: dim A_" + std::to_string(2 * i) +
                               " = " + std::to_string(A.dim(i)) + ", expected " +
                               std::to_string(expected[static_cast<std::size_t>(i)]));
  if (!A.standard_[static_cast<std::size_t>(last)].empty())
    throw std::runtime_error("A(V,n) construction failure: nonzero component above the top degree");

  if (with_tables) {
    for (int i = 0; i <= 2 * n; ++i)
      for (int j = 0; i + j <= 2 * n; ++j) {
        Matrix t(A.dim(i) * A.dim(j), A.dim(i + j));
        for (std::size_t p = 0; p < A.dim(i); ++p)
          for (std::size_t q = 0; q < A.dim(j); ++q) {
            const Exponent& mp = A.sym_[i].monomials()[A.standard_[i][p]];
            const Exponent& mq = A.sym_[j].monomials()[A.standard_[j][q]];
            Vector prod = zero_vector(A.sym_[i + j].size());
            prod[A.sym_[i + j].index(add(mp, mq))] = 1;
            t.set_row(p * A.dim(j) + q, A.reduce(i + j, prod));
          }
        A.tables_.emplace(std::make_pair(i, j), std::move(t));
      }
  }
  return A;
}

FrobeniusAlgebra build_algebra(const Matrix& gram, int n, bool with_tables) {
  return FrobeniusAlgebra::build(gram, n, with_tables);
}

std::size_t FrobeniusAlgebra::dim(int i) const {
  if (i < 0 || i > 2 * n_) return 0;
  return standard_.at(static_cast<std::size_t>(i)).size();
}

std::vector<std::size_t> FrobeniusAlgebra::dims() const {
  std::vector<std::size_t> d;
  for (int i = 0; i <= 2 * n_; ++i) d.push_back(dim(i));
  return d;
}

Vector FrobeniusAlgebra::reduce(int i, const Vector& sym_coeffs) const {
  if (i > 2 * n_) return {};
  const auto& ideal = ideal_.at(static_cast<std::size_t>(i));
  const Vector residual = ideal.reduce(sym_coeffs);
  const auto& std_m = standard_[static_cast<std::size_t>(i)];
  Vector out(std_m.size());
  for (std::size_t k = 0; k < std_m.size(); ++k) out[k] = residual[std_m[k]];
  return out;
}

Vector FrobeniusAlgebra::lift(int i, const Vector& a) const {
  const auto& std_m = standard_.at(static_cast<std::size_t>(i));
  if (a.size() != std_m.size()) throw std::invalid_argument("lift: dimension mismatch");
  Vector v = zero_vector(sym(i).size());
  for (std::size_t k = 0; k < std_m.size(); ++k) v[std_m[k]] = a[k];
  return v;
}

bool FrobeniusAlgebra::in_ideal(int i, const Vector& sym_coeffs) const {
  if (i > 2 * n_ + 1) throw std::out_of_range("in_ideal: degree beyond the computed range");
  return ideal_.at(static_cast<std::size_t>(i)).contains(sym_coeffs);
}

Vector FrobeniusAlgebra::multiply(int i, const Vector& a, int j, const Vector& b) const {
  if (i + j > 2 * n_) return {};
  if (has_tables()) {
    const Matrix& t = table(i, j);
    Vector out = zero_vector(dim(i + j));
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (a[p] == 0) continue;
      for (std::size_t q = 0; q < b.size(); ++q) {
        if (b[q] == 0) continue;
        const std::size_t row = p * dim(j) + q;
        for (std::size_t c = 0; c < out.size(); ++c)
          if (t(row, c) != 0) out[c] += a[p] * b[q] * t(row, c);
      }
    }
    return out;
  }
  return reduce(i + j, sym_multiply(sym(i), lift(i, a), sym(j), lift(j, b), sym(i + j)));
}

const Matrix& FrobeniusAlgebra::table(int i, int j) const {
  auto it = tables_.find({i, j});
  if (it == tables_.end()) throw std::out_of_range("multiplication table not available");
  return it->second;
}

Rational FrobeniusAlgebra::counit(const Vector& top_element) const {
  if (top_element.size() != 1) throw std::invalid_argument("counit: expects an element of A_{4n}");
  return top_element[0];
}

Matrix FrobeniusAlgebra::pairing_matrix(int i) const {
  const int j = 2 * n_ - i;
  Matrix m(dim(i), dim(j));
  for (std::size_t p = 0; p < dim(i); ++p)
    for (std::size_t q = 0; q < dim(j); ++q) {
      Vector a = zero_vector(dim(i)), b = zero_vector(dim(j));
      a[p] = 1;
      b[q] = 1;
      m(p, q) = counit(multiply(i, a, j, b));
    }
  return m;
}

bool FrobeniusAlgebra::pairing_nondegenerate() const {
  for (int i = 0; i <= 2 * n_; ++i) {
    const Matrix m = pairing_matrix(i);
    if (!m.is_square() || determinant(m) == 0) return false;
  }
  return true;
}

bool FrobeniusAlgebra::is_associative() const {
  for (int i = 0; i <= 2 * n_; ++i)
    for (int j = 0; i + j <= 2 * n_; ++j)
      for (int k = 0; i + j + k <= 2 * n_; ++k)
        for (std::size_t p = 0; p < dim(i); ++p)
          for (std::size_t q = 0; q < dim(j); ++q)
            for (std::size_t r = 0; r < dim(k); ++r) {
              Vector a = zero_vector(dim(i)), b = zero_vector(dim(j)), c = zero_vector(dim(k));
              a[p] = 1;
              b[q] = 1;
              c[r] = 1;
              if (multiply(i + j, multiply(i, a, j, b), k, c) !=
                  multiply(i, a, j + k, multiply(j, b, k, c)))
                return false;
            }
  return true;
}

bool FrobeniusAlgebra::is_commutative() const {
  // all generators have even cohomological degree, so graded commutativity is plain commutativity
  for (int i = 0; i <= 2 * n_; ++i)
    for (int j = 0; i + j <= 2 * n_; ++j)
      for (std::size_t p = 0; p < dim(i); ++p)
        for (std::size_t q = 0; q < dim(j); ++q) {
          Vector a = zero_vector(dim(i)), b = zero_vector(dim(j));
          a[p] = 1;
          b[q] = 1;
          if (multiply(i, a, j, b) != multiply(j, b, i, a)) return false;
        }
  return true;
}

Vector FrobeniusAlgebra::power(const Vector& alpha, int k) const {
  if (k > 2 * n_) return {};
  return reduce(k, linear_power(alpha, sym(k)));
}

bool FrobeniusAlgebra::is_algebra_automorphism(const Matrix& g) const {
  if (g.rows() != dim_v() || g.cols() != dim_v()) throw std::invalid_argument("automorphism: shape");
  std::vector<Matrix> subst;
  for (int d = 0; d <= 2 * n_ + 1; ++d) subst.push_back(substitution_matrix(g, d));

  for (int d = n_ + 1; d <= 2 * n_; ++d)
    for (const auto& b : ideal_[static_cast<std::size_t>(d)].basis())
      if (!in_ideal(d, subst[static_cast<std::size_t>(d)] * b)) return false;

  auto induced = [&](int i, const Vector& a) {
    return reduce(i, subst[static_cast<std::size_t>(i)] * lift(i, a));
  };
  for (int i = 0; i <= 2 * n_; ++i)
    for (int j = 0; i + j <= 2 * n_; ++j)
      for (std::size_t p = 0; p < dim(i); ++p)
        for (std::size_t q = 0; q < dim(j); ++q) {
          Vector a = zero_vector(dim(i)), b = zero_vector(dim(j));
          a[p] = 1;
          b[q] = 1;
          if (induced(i + j, multiply(i, a, j, b)) != multiply(i, induced(i, a), j, induced(j, b)))
            return false;
        }
  return true;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) || !mpz_perfect_square_p(r.get_den().get_mpz_t()))
    return std::nullopt;
  return Rational(sqrt(r.get_num()), sqrt(r.get_den()));
}

Rational quadratic_value(const Matrix& gram, const Vector& v) { return dot(v, gram * v); }

}  // namespace

std::optional<Vector> find_isotropic_vector(const Matrix& gram) {
  const std::size_t d = gram.rows();
  const Diagonalization diag = diagonalize_form(gram);
  for (std::size_t i = 0; i < d; ++i)
    if (diag.norms[i] == 0) return diag.basis.row(i);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      if (sgn(diag.norms[i]) == sgn(diag.norms[j])) continue;
      // a x^2 + b y^2 = 0 with x = 1, y = sqrt(-a/b)
      const auto y = rational_sqrt(-diag.norms[i] / diag.norms[j]);
      if (!y) continue;
      Vector v = diag.basis.row(i);
      const Vector w = diag.basis.row(j);
      for (std::size_t k = 0; k < d; ++k) v[k] += *y * w[k];
      return v;
    }
  if (d > 6) return std::nullopt;
  Vector v = zero_vector(d);
  std::optional<Vector> found;
  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (found) return;
    if (k == d) {
      if (!is_zero(v) && quadratic_value(gram, v) == 0) found = v;
      return;
    }
    for (int c = -3; c <= 3 && !found; ++c) {
      v[k] = c;
      search(k + 1);
    }
  };
  search(0);
  return found;
}

Vector isotropic_through(const Matrix& gram, const Vector& v0, const Vector& u) {
  if (quadratic_value(gram, v0) != 0) throw std::invalid_argument("isotropic_through: base vector is not isotropic");
  const Rational quu = quadratic_value(gram, u);
  if (quu == 0) return u;
  const Rational t = Rational(-2) * dot(v0, gram * u) / quu;
  Vector a = v0;
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += t * u[k];
  return a;
}

Vector random_isotropic_vector(const Matrix& gram, const Vector& v0, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (;;) {
    Vector u = zero_vector(gram.rows());
    for (auto& x : u) x = coeff(rng);
    if (is_zero(u)) continue;
    Vector a = isotropic_through(gram, v0, u);
    if (!is_zero(a)) return a;
  }
}

Sym2Tensor restriction_functional(const H2Lattice& L) {
  if (L.n() <= 1 || !is_triangular(L.n()))
    throw std::invalid_argument("restriction functional needs triangular n > 1 (n=" +
                                std::to_string(L.n()) + ")");
  Sym2Tensor f = bb_form(L);
  f.m = f.m + d_squared(L).m.scaled(2 * (L.n() - 1));
  return f;
}

}  // namespace hilbk3
