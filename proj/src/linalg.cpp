#include "t3dt/linalg.hpp"

namespace t3dt {

namespace {

void swap_rows(ZMatrix& m, Eigen::Index i, Eigen::Index j) { m.row(i).swap(m.row(j)); }
void swap_cols(ZMatrix& m, Eigen::Index i, Eigen::Index j) { m.col(i).swap(m.col(j)); }

// row(i) -= q * row(j), mirrored into u.
void row_op(ZMatrix& d, ZMatrix& u, Eigen::Index i, Eigen::Index j, const Integer& q) {
  d.row(i) -= q * d.row(j);
  u.row(i) -= q * u.row(j);
}
void col_op(ZMatrix& d, ZMatrix& v, Eigen::Index i, Eigen::Index j, const Integer& q) {
  d.col(i) -= q * d.col(j);
  v.col(i) -= q * v.col(j);
}

}  // namespace

SmithResult smith_normal_form(const ZMatrix& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SmithResult res;
  res.d = a;
  res.u = ZMatrix::Identity(rows, rows);
  res.v = ZMatrix::Identity(cols, cols);
  ZMatrix& d = res.d;

  const Eigen::Index t = std::min(rows, cols);
  for (Eigen::Index k = 0; k < t; ++k) {
    // Locate a pivot of minimal nonzero magnitude in the trailing block.
    Eigen::Index pi = -1, pj = -1;
    Integer best;
    for (Eigen::Index i = k; i < rows; ++i)
      for (Eigen::Index j = k; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        Integer mag = abs(d(i, j));
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != k) {
      swap_rows(d, pi, k);
      swap_rows(res.u, pi, k);
    }
    if (pj != k) {
      swap_cols(d, pj, k);
      swap_cols(res.v, pj, k);
    }

    // Kill the rest of row/column k; restart whenever a remainder shrinks
    // the pivot.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (Eigen::Index i = k + 1; i < rows; ++i) {
        if (d(i, k) == 0) continue;
        Integer q = d(i, k) / d(k, k);
        row_op(d, res.u, i, k, q);
        if (d(i, k) != 0) {  // remainder becomes the new, smaller pivot
          swap_rows(d, i, k);
          swap_rows(res.u, i, k);
          dirty = true;
        }
      }
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        if (d(k, j) == 0) continue;
        Integer q = d(k, j) / d(k, k);
        col_op(d, res.v, j, k, q);
        if (d(k, j) != 0) {
          swap_cols(d, j, k);
          swap_cols(res.v, j, k);
          dirty = true;
        }
      }
    }

    // Enforce divisibility d_k | entries below-right; folding a bad entry
    // into column k re-runs the elimination for this k.
    bool fixed = true;
    for (Eigen::Index i = k + 1; i < rows && fixed; ++i)
      for (Eigen::Index j = k + 1; j < cols && fixed; ++j) {
        if (d(i, j) % d(k, k) != 0) {
          // add row i to row k, then re-eliminate
          d.row(k) += d.row(i);
          res.u.row(k) += res.u.row(i);
          fixed = false;
        }
      }
    if (!fixed) {
      --k;
      continue;
    }
    if (d(k, k) < 0) {
      d.row(k) = -d.row(k);
      res.u.row(k) = -res.u.row(k);
    }
  }
  return res;
}

Integer int_det(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw shape_error("determinant of non-square matrix");
  QMatrix q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  Rational det = mat_det(q);
  if (det.get_den() != 1) throw std::logic_error("integer determinant is not integral");
  return det.get_num();
}

std::vector<Integer> char_poly(const ZMatrix& a) {
  if (a.rows() != a.cols()) throw shape_error("char_poly of non-square matrix");
  const Eigen::Index n = a.rows();
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  ZMatrix m = ZMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = ZMatrix(a * m);
    Integer tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += m(i, i);
    Integer ck, rem;
    mpz_tdiv_qr(ck.get_mpz_t(), rem.get_mpz_t(), Integer(-tr).get_mpz_t(), Integer(k).get_mpz_t());
    if (rem != 0) throw std::logic_error("char_poly: inexact trace division");
    c[n - k] = ck;
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) += ck;
  }
  return c;
}

}  // namespace t3dt
