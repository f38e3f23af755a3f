#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "templ/field.hpp"

namespace templ {

/// Dense exact matrix over a Field, row-major. Entries are always normalized
/// for the field, so `operator==` is literal equality.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = {});

  static Matrix identity(std::size_t n, Field field = {});
  /// Small literal matrices for tests and fixtures.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows, Field field = {});
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols, Field field = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores field.normalize(v).
  void set(std::size_t i, std::size_t j, const Rational& v);
  /// Raw access for kernels; callers must keep entries normalized.
  Rational& raw(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t j) const;
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix rows_range(std::size_t first, std::size_t count) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Rational& c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_{};
  std::vector<Rational> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
/// Concatenates column blocks; all blocks must share the row count.
Matrix hstack(std::span<const Matrix> blocks, std::size_t rows, Field field);
Matrix vstack(std::span<const Matrix> blocks, std::size_t cols, Field field);
Matrix block_diagonal(std::span<const Matrix> blocks, Field field);

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0} as columns, one per free column, in the standard
/// RREF parametrization (free variable = 1, other free variables = 0).
Matrix nullspace(const Matrix& m);
/// A solution x of a x = b (free variables set to zero), or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace templ
