#pragma once

#include <optional>
#include <vector>

#include "cla/scalar.hpp"

namespace cla {

using Vec = std::vector<Scalar>;

Vec vec_zero(int n, const FieldDescriptor& f);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
void vec_axpy(Vec& acc, const Scalar& c, const Vec& v);  // acc += c*v

/// Dense matrix of exact scalars. Row-major; all entries share one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const FieldDescriptor& f);

  static Matrix identity(int n, const FieldDescriptor& f);
  static Matrix from_rows(std::vector<Vec> rows, const FieldDescriptor& f);
  static Matrix from_columns(const std::vector<Vec>& cols,
                             const FieldDescriptor& f, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldDescriptor& field() const { return field_; }

  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Vec row(int i) const;
  Vec col(int j) const;
  Matrix transpose() const;

  Vec apply(const Vec& x) const;  // this * x
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const;
  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  FieldDescriptor field_;
  std::vector<Scalar> a_;
};

/// Exact Gauss-Jordan elimination in place (first nonzero pivot).
/// Returns the pivot column per pivot row; the matrix ends in RREF.
std::vector<int> row_reduce(Matrix& m);

int rank(Matrix m);
Matrix inverse(const Matrix& m);               // throws Error if singular
bool is_invertible(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
/// One exact solution of m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Incremental span membership: feed basis vectors once, then express
/// arbitrary vectors in that basis.
class SpanSolver {
 public:
  SpanSolver(const std::vector<Vec>& basis, int ambient_dim,
             const FieldDescriptor& f);
  /// Coordinates of v in the basis, or nullopt if v is outside the span.
  std::optional<Vec> coords_of(const Vec& v) const;
  int dim() const { return static_cast<int>(basis_.size()); }

 private:
  std::vector<Vec> basis_;
  FieldDescriptor field_;
  Matrix reduced_;          // RREF of the basis-as-columns matrix, augmented solver
  std::vector<int> pivots_;
  Matrix column_matrix_;
};

}  // namespace cla
