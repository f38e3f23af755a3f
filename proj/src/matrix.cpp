#include "templ/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "templ/kernels.hpp"

namespace templ {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows, Field field) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c, field);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Rational(v));
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols, Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& v) { data_[i * cols_ + j] = field_.normalize(v); }

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

Matrix Matrix::column(std::size_t j) const { return columns(j, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column range");
  Matrix m(rows_, count, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m.data_[i * count + j] = data_[i * cols_ + first + j];
  return m;
}

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("row range");
  Matrix m(count, cols_, field_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.data_[i * cols_ + j] = data_[(first + i) * cols_ + j];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::multiply(a, b); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix m(a.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix m(a.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return m;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix m(rows_, cols_, field_);
  Rational cc = field_.normalize(c);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.mul(cc, data_[i]);
  return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) { return kernels::kronecker(a, b); }

Matrix hstack(std::span<const Matrix> blocks, std::size_t rows, Field field) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += b.cols();
  }
  Matrix m(rows, cols, field);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.raw(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

Matrix vstack(std::span<const Matrix> blocks, std::size_t cols, Field field) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  Matrix m(rows, cols, field);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m.raw(off + i, j) = b(i, j);
    off += b.rows();
  }
  return m;
}

Matrix block_diagonal(std::span<const Matrix> blocks, Field field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols, field);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.raw(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Echelon row_reduce(Matrix m) {
  const Field f = m.field();
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.raw(row, j), m.raw(pivot, j));
    Rational scale = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.raw(row, j) = f.mul(m(row, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.raw(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const Field f = m.field();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix basis(m.cols(), free_cols.size(), f);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.raw(fc, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.raw(e.pivots[r], k) = f.neg(e.reduced(r, fc));
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Field f = a.field();
  std::vector<Matrix> parts{a, b};
  Matrix aug = hstack(parts, a.rows(), f);
  Echelon e = row_reduce(aug);
  Matrix x(a.cols(), b.cols(), f);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t pc = e.pivots[r];
    if (pc >= a.cols()) return std::nullopt;  // pivot in the right-hand side: inconsistent
    for (std::size_t j = 0; j < b.cols(); ++j) x.raw(pc, j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows(), m.field()));
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace templ
