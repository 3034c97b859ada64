#pragma once

// Dense exact linear algebra over Q.

#include <cstddef>
#include <optional>
#include <vector>

#include "hilbk3/rational.hpp"

namespace hilbk3 {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  void set_row(std::size_t i, const Vector& v);

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(const Rational& s) const;
  bool operator==(const Matrix& o) const;

  /// Block-diagonal sum.
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator*(const Vector& v, const Matrix& m);  // row vector times matrix

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Rows form a basis of the right kernel {x : m x = 0}.
Matrix nullspace(const Matrix& m);

Rational determinant(Matrix m);

std::optional<Matrix> inverse(const Matrix& m);

/// Incrementally maintained subspace of Q^dim kept in reduced echelon form.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return dim_; }

  /// Residual of v after elimination against the current basis.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Returns true when v enlarged the space.
  bool insert(Vector v);

  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Orthogonal basis for a symmetric bilinear form with its diagonal values.
struct Diagonalization {
  Matrix basis;   // rows are mutually orthogonal
  Vector norms;   // norms[i] = (basis_i, basis_i)
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Rational congruence diagonalization of a symmetric matrix.
Diagonalization diagonalize_form(const Matrix& gram);

}  // namespace hilbk3
