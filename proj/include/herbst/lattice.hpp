#pragma once

#include "herbst/errors.hpp"
#include "herbst/linalg.hpp"
#include "herbst/matrix.hpp"

#include <vector>

namespace herbst {

namespace detail {

inline BigInteger floor_div(const BigInteger &a, const BigInteger &b) {
  BigInteger q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

} // namespace detail

/// Row-style Hermite form with the unimodular transform: `transform * input ==
/// echelon`. The first `rank` rows of `echelon` are the Hermite normal form;
/// the remaining rows are zero.
struct HermiteDecomposition {
  IntMatrix echelon;
  IntMatrix transform;
  std::size_t rank = 0;
};

inline HermiteDecomposition hermite_decompose(const IntMatrix &m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = row; i < h.rows(); ++i)
        if (h(i, col) != 0 && (best == h.rows() || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == h.rows()) break;
      have_pivot = true;
      h.swap_rows(best, row);
      u.swap_rows(best, row);
      bool cleared = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        const BigInteger q = h(i, col) / h(row, col);
        h.add_row_multiple(i, row, -q);
        u.add_row_multiple(i, row, -q);
        if (h(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    const BigInteger pivot = h(row, col);
    for (std::size_t i = 0; i < row; ++i) {
      const BigInteger q = detail::floor_div(h(i, col), pivot);
      h.add_row_multiple(i, row, -q);
      u.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  return {std::move(h), std::move(u), row};
}

/// Unique Hermite basis of the lattice spanned by the rows of `m`: upper
/// echelon, positive pivots, entries above each pivot in [0, pivot). Zero rows
/// are dropped, so the result has rank(m) rows.
inline IntMatrix hermite_normal_form(const IntMatrix &m) {
  auto hd = hermite_decompose(m);
  std::vector<std::size_t> keep(hd.rank);
  for (std::size_t i = 0; i < hd.rank; ++i) keep[i] = i;
  return hd.echelon.select_rows(keep);
}

/// D = U * M * V with U, V unimodular and D diagonal (possibly rectangular).
/// The nonzero diagonal is positive and ascending under divisibility.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<BigInteger> diagonal() const {
    std::vector<BigInteger> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
  }
};

/// Min-absolute-value pivoting with a divisibility fix-up pass.
inline SmithDecomposition smith_decompose(const IntMatrix &m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    bool any = false;
    for (;;) {
      std::size_t bi = 0, bj = 0;
      bool found = false;
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j)
          if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
            found = true;
          }
      if (!found) break;
      any = true;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const BigInteger q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const BigInteger q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block; otherwise pull an
      // offending row up and keep reducing (the pivot strictly shrinks).
      bool fixed = false;
      for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, BigInteger(1));
            u.add_row_multiple(t, i, BigInteger(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (!any) break;
    if (d(t, t) < 0) {
      d.negate_col(t);
      v.negate_col(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

/// Smith decomposition of a nonsingular square matrix.
inline SmithDecomposition smith_normal_form(const IntMatrix &r) {
  if (!r.is_square()) throw Error(ErrorKind::NotSquare, "Smith form requires a square matrix");
  auto sd = smith_decompose(r);
  for (std::size_t i = 0; i < r.rows(); ++i)
    if (sd.D(i, i) == 0) throw Error(ErrorKind::SingularMatrix, "Smith form of a singular matrix");
  return sd;
}

/// Nonzero invariant factors of any integer matrix, ascending.
inline std::vector<BigInteger> smith_invariants(const IntMatrix &m) {
  std::vector<BigInteger> out;
  for (auto &d : smith_decompose(m).diagonal())
    if (d != 0) out.push_back(d);
  return out;
}

/// N x n basis (columns) of the saturated lattice ker(Q) ∩ Z^N, n = N - rank Q.
/// Canonical: the transpose of the result is in Hermite normal form.
inline IntMatrix integer_kernel(const IntMatrix &q) {
  const std::size_t n_fields = q.cols();
  auto hd = hermite_decompose(q.transpose());
  std::vector<std::size_t> kernel_rows;
  for (std::size_t i = hd.rank; i < n_fields; ++i) kernel_rows.push_back(i);
  IntMatrix basis = hd.transform.select_rows(kernel_rows);
  if (basis.rows() == 0) return IntMatrix(n_fields, 0);
  return hermite_normal_form(basis).transpose();
}

/// r x N basis (rows) of the saturation of Q's row lattice, in Hermite form.
/// Its integer kernel equals that of Q.
inline IntMatrix row_space_reduce(const IntMatrix &q) {
  IntMatrix a = integer_kernel(q);
  IntMatrix rows = integer_kernel(a.transpose());
  if (rows.cols() == 0) return IntMatrix(0, q.cols());
  return hermite_normal_form(rows.transpose());
}

} // namespace herbst
