#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mvv/errors.hpp"
#include "mvv/rational.hpp"

namespace mvv {

/// Dense rational matrix. Row-major, value-semantic, immutable in spirit:
/// algorithms below return fresh matrices instead of mutating shared state.
class matrix {
 public:
  matrix() = default;
  matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static matrix identity(std::size_t n) {
    matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  matrix transposed() const {
    matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  matrix operator*(const matrix& rhs) const {
    if (cols_ != rhs.rows_) throw error("matrix product shape mismatch");
    matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const rational& a = (*this)(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
      }
    return out;
  }

  /// Rows of `top` followed by rows of `bottom`. Column counts must match;
  /// a matrix with zero rows contributes nothing but must still agree on
  /// the column count unless it is completely empty.
  static matrix vstack(const matrix& top, const matrix& bottom) {
    if (top.rows() == 0 && top.cols() == 0) return bottom;
    if (bottom.rows() == 0 && bottom.cols() == 0) return top;
    if (top.cols() != bottom.cols()) throw error("vstack column mismatch");
    matrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
      for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
      for (std::size_t c = 0; c < bottom.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
    return out;
  }

  matrix row(std::size_t r) const {
    matrix out(1, cols_);
    for (std::size_t c = 0; c < cols_; ++c) out(0, c) = (*this)(r, c);
    return out;
  }

  bool operator==(const matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination. Each row is first
/// scaled by the lcm of its denominators, which leaves the row space
/// unchanged; the single-step Bareiss recurrence then keeps every
/// intermediate entry an integer minor, bounding coefficient growth.
inline std::size_t rank(const matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<bigint>> a(rows, std::vector<bigint>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    bigint scale = 1;
    for (std::size_t c = 0; c < cols; ++c)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den().get_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      bigint factor = scale / m(r, c).get_den();
      a[r][c] = m(r, c).get_num() * factor;
    }
  }
  bigint prev = 1;
  std::size_t rr = 0;
  for (std::size_t c = 0; c < cols && rr < rows; ++c) {
    std::size_t pivot = rr;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rr], a[pivot]);
    for (std::size_t i = rr + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        bigint t = a[rr][c] * a[i][j] - a[i][c] * a[rr][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rr][c];
    ++rr;
  }
  return rr;
}

/// Reduced row echelon form over the rationals: unit pivots, zeros above
/// and below each pivot, zero rows at the bottom. Unique per row space,
/// so it doubles as the canonical form for subspace bases.
inline matrix rref(matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(lead, j), m(pivot, j));
    const rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || m(i, c) == 0) continue;
      const rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(lead, j);
    }
    ++lead;
  }
  return m;
}

/// RREF with zero rows dropped: the canonical basis of the row space.
inline matrix row_basis(const matrix& m) {
  matrix r = rref(m);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) break;  // RREF pushes zero rows to the bottom
    ++nonzero;
  }
  matrix out(nonzero, m.cols());
  for (std::size_t i = 0; i < nonzero; ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = r(i, j);
  return out;
}

/// Basis (as rows) of {x : m x = 0}. A matrix with zero rows has the full
/// ambient space as kernel.
inline matrix kernel_basis(const matrix& m, std::size_t cols_hint = 0) {
  const std::size_t cols = m.rows() == 0 ? (m.cols() > 0 ? m.cols() : cols_hint) : m.cols();
  if (m.rows() == 0) return matrix::identity(cols);
  matrix r = rref(m);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (r(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
    }
  }
  matrix out(cols - pivot_col.size(), cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out(row, f) = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out(row, pivot_col[i]) = -r(i, f);
    ++row;
  }
  return out;
}

}  // namespace mvv
