#include "cla/matrix.hpp"

namespace cla {

Vec vec_zero(int n, const FieldDescriptor& f) {
  return Vec(n, Scalar::zero(f));
}

bool vec_is_zero(const Vec& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch in add");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch in sub");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (Scalar& s : r) s *= c;
  return r;
}

void vec_axpy(Vec& acc, const Scalar& c, const Vec& v) {
  if (acc.size() != v.size()) throw Error("vector length mismatch in axpy");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

Matrix::Matrix(int rows, int cols, const FieldDescriptor& f)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(int n, const FieldDescriptor& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(std::vector<Vec> rows, const FieldDescriptor& f) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c, f);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error("ragged rows in matrix construction");
    for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols,
                            const FieldDescriptor& f, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()), f);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw Error("column length mismatch in matrix construction");
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec r;
  r.reserve(cols_);
  for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
  return r;
}

Vec Matrix::col(int j) const {
  Vec c;
  c.reserve(rows_);
  for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw Error("matrix-vector shape mismatch");
  Vec y = vec_zero(rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Matrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (Scalar& s : r.a_) s *= c;
  return r;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ",";
      s += at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

namespace {

// Gauss-Jordan with pivots restricted to the first `limit` columns.
std::vector<int> reduce_limited(Matrix& m, int limit) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < limit && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = m.at(r, c).inv();
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<int> row_reduce(Matrix& m) { return reduce_limited(m, m.cols()); }

int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  auto pivots = reduce_limited(aug, n);
  if (static_cast<int>(pivots.size()) != n)
    throw Error("matrix is singular");
  Matrix inv(n, n, m.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  Matrix red = m;
  auto pivots = row_reduce(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = vec_zero(m.cols(), m.field());
    v[c] = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -red.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw Error("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto pivots = reduce_limited(aug, m.cols());
  for (int i = static_cast<int>(pivots.size()); i < m.rows(); ++i)
    if (!aug.at(i, m.cols()).is_zero()) return std::nullopt;
  Vec x = vec_zero(m.cols(), m.field());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

SpanSolver::SpanSolver(const std::vector<Vec>& basis, int ambient_dim,
                       const FieldDescriptor& f)
    : basis_(basis), field_(f) {
  int k = static_cast<int>(basis.size());
  column_matrix_ = Matrix::from_columns(basis, f, ambient_dim);
  // reduce [A | I]; the right block records the row operations
  Matrix aug(ambient_dim, k + ambient_dim, f);
  for (int i = 0; i < ambient_dim; ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = column_matrix_.at(i, j);
    aug.at(i, k + i) = Scalar::one(f);
  }
  pivots_ = reduce_limited(aug, k);
  reduced_ = std::move(aug);
}

std::optional<Vec> SpanSolver::coords_of(const Vec& v) const {
  int n = column_matrix_.rows();
  int k = column_matrix_.cols();
  if (static_cast<int>(v.size()) != n)
    throw Error("span solver: ambient dimension mismatch");
  // w = T v where T is the recorded row-operation matrix
  Vec w = vec_zero(n, field_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!reduced_.at(i, k + j).is_zero())
        w[i] += reduced_.at(i, k + j) * v[j];
  for (int i = static_cast<int>(pivots_.size()); i < n; ++i)
    if (!w[i].is_zero()) return std::nullopt;
  Vec x = vec_zero(k, field_);
  for (std::size_t r = 0; r < pivots_.size(); ++r)
    x[pivots_[r]] = w[r];
  // dependent basis vectors would leave free columns; reject silently
  // inconsistent coordinates by checking the residual exactly
  Vec check = column_matrix_.apply(x);
  if (check != v) return std::nullopt;
  return x;
}

}  // namespace cla
