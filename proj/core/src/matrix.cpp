#include "gradus/matrix.hpp"

#include "gradus/error.hpp"

namespace gradus {
namespace {

// Residue-level elimination for F_p; avoids per-entry variant dispatch.
std::vector<std::size_t> row_reduce_prime(std::vector<std::uint32_t>& a, std::size_t rows,
                                          std::size_t cols, std::uint32_t p) {
  auto inv = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[pr * cols + k], a[r * cols + k]);
    }
    std::uint64_t scale = inv(a[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) {
      a[r * cols + k] = static_cast<std::uint32_t>(a[r * cols + k] * scale % p);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      std::uint64_t neg = p - f;
      for (std::size_t k = c; k < cols; ++k) {
        std::uint32_t pivot_entry = a[r * cols + k];
        if (pivot_entry == 0) continue;
        a[i * cols + k] = static_cast<std::uint32_t>((a[i * cols + k] + neg * pivot_entry) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MismatchError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) throw MismatchError("matrix entry from a different field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw MismatchError("vector length does not match matrix columns");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

RowEchelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (m.field().is_prime()) {
    std::vector<std::uint32_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).residue();
    }
    auto pivots = row_reduce_prime(a, rows, cols, m.field().characteristic());
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(m.field(), a[r * cols + c]);
    }
    return {std::move(m), std::move(pivots)};
  }

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pr, k), m(r, k));
    }
    Scalar scale = m(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k) m(r, k) *= scale;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gradus
