#include "hilbk3/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hilbk3 {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: dimension mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix -: shape mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix *: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix * vector: shape mismatch");
  Vector r = zero_vector(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

Vector operator*(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector * matrix: shape mismatch");
  Vector r = zero_vector(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) r[j] += v[i] * m(i, j);
  }
  return r;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Matrix nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(0, m.cols());
  return Matrix::from_rows(basis);
}

Rational determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Vector RowSpace::reduce(Vector v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational coeff = v[pivots_[k]];
    if (coeff == 0) continue;
    const Vector& b = basis_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (b[j] != 0) v[j] -= coeff * b[j];
  }
  return v;
}

bool RowSpace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool RowSpace::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // keep the basis fully reduced so reduce() is a single pass
  for (auto& b : basis_) {
    const Rational coeff = b[p];
    if (coeff == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j] != 0) b[j] -= coeff * v[j];
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Diagonalization diagonalize_form(const Matrix& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("diagonalize_form: matrix not symmetric");
  const std::size_t n = gram.rows();
  auto form = [&](const Vector& a, const Vector& b) { return dot(a, gram * b); };

  std::vector<Vector> pending;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = zero_vector(n);
    e[i] = 1;
    pending.push_back(std::move(e));
  }

  Diagonalization out;
  std::vector<Vector> chosen;
  while (!pending.empty()) {
    std::optional<Vector> pick;
    std::size_t pick_index = pending.size();
    for (std::size_t i = 0; i < pending.size() && !pick; ++i) {
      if (form(pending[i], pending[i]) != 0) {
        pick = pending[i];
        pick_index = i;
      }
    }
    if (!pick) {
      // all remaining vectors isotropic: use u + w for a non-orthogonal pair
      for (std::size_t i = 0; i < pending.size() && !pick; ++i)
        for (std::size_t j = i + 1; j < pending.size() && !pick; ++j)
          if (form(pending[i], pending[j]) != 0) {
            Vector s = pending[i];
            for (std::size_t k = 0; k < n; ++k) s[k] += pending[j][k];
            pending[i] = s;
            pick = s;
            pick_index = i;
          }
    }
    if (!pick) {
      for (auto& v : pending) {
        chosen.push_back(v);
        out.norms.push_back(0);
        ++out.zero;
      }
      break;
    }
    const Vector v = *pick;
    const Rational qv = form(v, v);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick_index));
    for (auto& r : pending) {
      const Rational c = form(r, v) / qv;
      if (c == 0) continue;
      for (std::size_t k = 0; k < n; ++k) r[k] -= c * v[k];
    }
    chosen.push_back(v);
    out.norms.push_back(qv);
    if (qv > 0) ++out.positive; else ++out.negative;
  }
  out.basis = chosen.empty() ? Matrix(0, n) : Matrix::from_rows(chosen);
  return out;
}

}  // namespace hilbk3
