#pragma once

#include "herbst/errors.hpp"
#include "herbst/matrix.hpp"

#include <optional>
#include <vector>

namespace herbst {

namespace detail {

// Fraction-free (Bareiss) row echelon reduction in place. After step k every
// surviving entry is a (k+1)-minor of the input, so each division is exact.
// Returns the pivot columns; `swaps` counts row transpositions.
inline std::vector<std::size_t> bareiss_echelon(IntMatrix &m, std::size_t &swaps) {
  std::vector<std::size_t> pivots;
  swaps = 0;
  BigInteger prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      m.swap_rows(p, row);
      ++swaps;
    }
    const BigInteger pivot = m(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const BigInteger lead = m(i, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m(i, j) = (pivot * m(i, j) - lead * m(row, j)) / prev;
      m(i, col) = 0;
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace detail

/// Rank over Q.
inline std::size_t rank(const IntMatrix &m) {
  IntMatrix work = m;
  std::size_t swaps = 0;
  return detail::bareiss_echelon(work, swaps).size();
}

inline BigInteger determinant(const IntMatrix &m) {
  if (!m.is_square())
    throw Error(ErrorKind::NotSquare, "determinant of " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix work = m;
  std::size_t swaps = 0;
  auto pivots = detail::bareiss_echelon(work, swaps);
  if (pivots.size() < n) return 0;
  // The last Bareiss pivot is the full determinant up to row swaps.
  BigInteger det = work(n - 1, n - 1);
  return swaps % 2 == 0 ? det : BigInteger(-det);
}

/// Gauss-Jordan over Q.
inline RatMatrix invert_rational(const IntMatrix &m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = to_rational(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible over Q");
    a.swap_rows(p, col);
    inv.swap_rows(p, col);
    const Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = -a(i, col);
      a.add_row_multiple(i, col, f);
      inv.add_row_multiple(i, col, f);
    }
  }
  return inv;
}

/// Integer adjugate: adj(m) * m = det(m) * I. Used where only signs of
/// m^{-1} entries matter and rationals are unnecessary.
inline IntMatrix adjugate(const IntMatrix &m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "adjugate of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear();
      cols.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      BigInteger minor = determinant(m.select_rows(rows).select_columns(cols));
      adj(i, j) = (i + j) % 2 == 0 ? minor : BigInteger(-minor);
    }
  return adj;
}

/// Reduced row echelon form over Q with its pivot columns.
struct EchelonForm {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

inline EchelonForm rref(RatMatrix a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, row);
    const Rational scale = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= scale;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != row && a(i, col) != 0) a.add_row_multiple(i, row, -a(i, col));
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

/// Pivot solution of m * x = b: free variables set to zero, pivot variables
/// read off the reduced row echelon form. Empty when b is not in the column
/// span of m.
inline std::optional<RatVector> solve_pivot(const RatMatrix &m, const RatVector &b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto ef = rref(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < ef.pivots.size(); ++k) x[ef.pivots[k]] = ef.reduced(k, m.cols());
  return x;
}

} // namespace herbst
