#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gradus/scalar.hpp"

namespace gradus {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over one coefficient field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  /// Builds a matrix from rows of equal length; throws MismatchError otherwise.
  static Matrix from_rows(FieldSpec field, const std::vector<Vector>& rows, std::size_t cols);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vector apply(std::span<const Scalar> v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                          // reduced row echelon form
  std::vector<std::size_t> pivot_columns;  // one per nonzero row, increasing

  std::size_t rank() const { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination, pivoting on the first nonzero entry of each column.
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space {v : M v = 0}. The basis vector for the
/// free column f has a 1 at position f and zeros at the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

}  // namespace gradus
