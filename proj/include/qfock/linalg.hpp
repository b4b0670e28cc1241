#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qfock/rational.hpp"

namespace qfock {

// Dense matrix over an exact scalar type. The elimination routines need
// +, -, *, == and a free function field_inverse(x) (found by ADL) defined
// for nonzero x; the ring-only routines need just +, -, *, ==.
template <typename T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

namespace detail {
// Additive zero derived from an existing entry, so scalar types that carry
// context (a radicand, an arity) produce a compatible zero.
template <typename T>
T zero_like(const Matrix<T>& m) {
  return m.at(0, 0) - m.at(0, 0);
}
}  // namespace detail

template <typename T>
Matrix<T> matrix_mul(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix_mul: shape mismatch");
  const T zero = detail::zero_like(x);
  Matrix<T> out(x.rows(), y.cols(), zero);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const T& xik = x.at(i, k);
      if (xik == zero) continue;
      for (std::size_t j = 0; j < y.cols(); ++j)
        out.at(i, j) = out.at(i, j) + xik * y.at(k, j);
    }
  return out;
}

template <typename T>
Matrix<T> matrix_add(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix_add: shape mismatch");
  Matrix<T> out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = out.at(i, j) + y.at(i, j);
  return out;
}

template <typename T>
Matrix<T> matrix_sub(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix_sub: shape mismatch");
  Matrix<T> out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = out.at(i, j) - y.at(i, j);
  return out;
}

template <typename T>
Matrix<T> matrix_scale(const T& c, const Matrix<T>& x) {
  Matrix<T> out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = c * out.at(i, j);
  return out;
}

template <typename T>
Matrix<T> matrix_transpose(const Matrix<T>& x) {
  Matrix<T> out(x.cols(), x.rows(), x.at(0, 0));
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(j, i) = x.at(i, j);
  return out;
}

// Exact rank by Gaussian elimination over a field.
template <typename T>
std::size_t matrix_rank(Matrix<T> m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const T zero = detail::zero_like(m);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m.at(piv, col) == zero) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
    const T inv = field_inverse(m.at(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == zero) continue;
      const T f = m.at(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Exact determinant of a square matrix over a field (product of pivots with
// the row-swap sign).
template <typename T>
T matrix_det(Matrix<T> m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("matrix_det: need a nonempty square matrix");
  const T zero = detail::zero_like(m);
  bool negate = false;
  T det = zero;
  bool first = true;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t piv = col;
    while (piv < m.rows() && m.at(piv, col) == zero) ++piv;
    if (piv == m.rows()) return zero;
    if (piv != col) {
      negate = !negate;
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(col, j));
    }
    const T& pivot = m.at(col, col);
    if (first) {
      det = pivot;
      first = false;
    } else {
      det = det * pivot;
    }
    const T inv = field_inverse(pivot);
    for (std::size_t i = col + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == zero) continue;
      const T f = m.at(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return negate ? zero - det : det;
}

// Exact inverse over a field; nullopt when singular.
template <typename T>
std::optional<Matrix<T>> matrix_inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("matrix_inverse: need a nonempty square matrix");
  const std::size_t nn = m.rows();
  const T zero = detail::zero_like(m);
  const T* seed = nullptr;
  for (std::size_t i = 0; i < nn && !seed; ++i)
    for (std::size_t j = 0; j < nn && !seed; ++j)
      if (!(m.at(i, j) == zero)) seed = &m.at(i, j);
  if (!seed) return std::nullopt;
  const T one = *seed * field_inverse(*seed);

  Matrix<T> aug(nn, 2 * nn, zero);
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, nn + i) = one;
  }
  for (std::size_t col = 0; col < nn; ++col) {
    std::size_t piv = col;
    while (piv < nn && aug.at(piv, col) == zero) ++piv;
    if (piv == nn) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < 2 * nn; ++j) std::swap(aug.at(piv, j), aug.at(col, j));
    const T inv = field_inverse(aug.at(col, col));
    for (std::size_t j = 0; j < 2 * nn; ++j) aug.at(col, j) = inv * aug.at(col, j);
    for (std::size_t i = 0; i < nn; ++i) {
      if (i == col || aug.at(i, col) == zero) continue;
      const T f = aug.at(i, col);
      for (std::size_t j = 0; j < 2 * nn; ++j)
        aug.at(i, j) = aug.at(i, j) - f * aug.at(col, j);
    }
  }
  Matrix<T> out(nn, nn, zero);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) out.at(i, j) = aug.at(i, nn + j);
  return out;
}

// Indices of a maximal linearly independent subset of rows, scanned in order.
template <typename T>
std::vector<std::size_t> independent_rows(const Matrix<T>& m) {
  std::vector<std::size_t> chosen;
  if (m.rows() == 0 || m.cols() == 0) return chosen;
  const T zero = detail::zero_like(m);
  std::vector<std::vector<T>> basis;  // echelon rows, leading entry 1
  std::vector<std::size_t> lead;      // leading column per basis row
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<T> row;
    row.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const T& f = row[lead[b]];
      if (f == zero) continue;
      const T c = f;
      for (std::size_t j = 0; j < m.cols(); ++j) row[j] = row[j] - c * basis[b][j];
    }
    std::size_t lc = 0;
    while (lc < m.cols() && row[lc] == zero) ++lc;
    if (lc == m.cols()) continue;
    const T inv = field_inverse(row[lc]);
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = inv * row[j];
    basis.push_back(std::move(row));
    lead.push_back(lc);
    chosen.push_back(i);
  }
  return chosen;
}

// Determinant over a commutative ring (no division): column-by-column
// assignment over row subsets. Intended for small symbolic matrices.
template <typename T>
T det_ring(const Matrix<T>& m, const T& zero, const T& one) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_ring: need a square matrix");
  const std::size_t nn = m.rows();
  if (nn == 0 || nn > 20) throw std::invalid_argument("det_ring: order out of range");
  std::vector<T> dp(std::size_t(1) << nn, zero);
  dp[0] = one;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == zero) continue;
    std::size_t col = 0;
    for (std::size_t b = 0; b < nn; ++b) col += (mask >> b) & 1u;
    if (col == nn) continue;
    for (std::size_t r = 0; r < nn; ++r) {
      if ((mask >> r) & 1u) continue;
      if (m.at(r, col) == zero) continue;
      // Adding row r after the rows in mask creates one inversion per
      // already-used row below it in index order.
      std::size_t above = 0;
      for (std::size_t b = r + 1; b < nn; ++b) above += (mask >> b) & 1u;
      const T term = m.at(r, col) * dp[mask];
      const std::size_t next = mask | (std::size_t(1) << r);
      dp[next] = (above % 2 == 0) ? dp[next] + term : dp[next] - term;
    }
  }
  return dp[dp.size() - 1];
}

}  // namespace qfock
