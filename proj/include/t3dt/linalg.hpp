#pragma once

// Dense exact linear algebra on Eigen containers: rank, determinant,
// kernel and inverse over any exact field scalar, plus Smith normal form
// over the integers. Elimination is plain Gaussian with first-nonzero
// pivoting; inputs here are small and exactness is the contract.

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

#include "t3dt/exact.hpp"

namespace Eigen {

template <>
struct NumTraits<t3dt::Rational> : GenericNumTraits<t3dt::Rational> {
  typedef t3dt::Rational Real;
  typedef t3dt::Rational NonInteger;
  typedef t3dt::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 30,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<t3dt::Integer> : GenericNumTraits<t3dt::Integer> {
  typedef t3dt::Integer Real;
  typedef t3dt::Rational NonInteger;
  typedef t3dt::Integer Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 20,
    MulCost = 20,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

// Treated as a scalar field, not as Eigen's complex type; adjoint() and
// friends are not used on these matrices.
template <>
struct NumTraits<t3dt::GaussianRational> : GenericNumTraits<t3dt::GaussianRational> {
  typedef t3dt::GaussianRational Real;
  typedef t3dt::GaussianRational NonInteger;
  typedef t3dt::GaussianRational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 60,
    MulCost = 120,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace t3dt {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = MatrixX<Rational>;
using ZMatrix = MatrixX<Integer>;
using GMatrix = MatrixX<GaussianRational>;  // the artifact's ExactMatrix
using GVector = VectorX<GaussianRational>;

class shape_error : public std::invalid_argument {
 public:
  explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};
class singular_error : public std::domain_error {
 public:
  explicit singular_error(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

// Row echelon reduction in place; returns (rank, pivot columns) and
// optionally accumulates det(original) when det != nullptr (requires
// square input).
template <class Scalar>
Eigen::Index echelonize(MatrixX<Scalar>& m, std::vector<Eigen::Index>* pivots, Scalar* det) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  if (det) *det = Scalar(1);
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!(m(i, c) == Scalar(0))) {
        p = i;
        break;
      }
    if (p < 0) {
      if (det) *det = Scalar(0);
      continue;
    }
    if (p != r) {
      m.row(p).swap(m.row(r));
      if (det) *det = -*det;
    }
    if (det) *det = *det * m(r, c);
    Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == Scalar(0)) continue;
      Scalar f = m(i, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace detail

template <class Scalar>
Eigen::Index mat_rank(MatrixX<Scalar> m) {
  return detail::echelonize<Scalar>(m, nullptr, nullptr);
}

template <class Scalar>
Scalar mat_det(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) throw shape_error("determinant of non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  MatrixX<Scalar> w = m;
  Scalar det;
  Eigen::Index r = detail::echelonize<Scalar>(w, nullptr, &det);
  return r == m.rows() ? det : Scalar(0);
}

// Basis of the null space (empty iff injective).
template <class Scalar>
std::vector<VectorX<Scalar>> mat_kernel(const MatrixX<Scalar>& m) {
  MatrixX<Scalar> w = m;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank = detail::echelonize<Scalar>(w, &pivots, nullptr);
  // Back-substitute to reduced echelon form.
  for (Eigen::Index r = rank - 1; r >= 0; --r) {
    Eigen::Index c = pivots[r];
    Scalar inv = Scalar(1) / w(r, c);
    for (Eigen::Index j = c; j < w.cols(); ++j) w(r, j) = w(r, j) * inv;
    for (Eigen::Index i = 0; i < r; ++i) {
      if (w(i, c) == Scalar(0)) continue;
      Scalar f = w(i, c);
      for (Eigen::Index j = c; j < w.cols(); ++j) w(i, j) -= f * w(r, j);
    }
  }
  std::vector<VectorX<Scalar>> basis;
  std::vector<bool> is_pivot(m.cols(), false);
  for (Eigen::Index c : pivots) is_pivot[c] = true;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Constant(m.cols(), Scalar(0));
    v(c) = Scalar(1);
    for (Eigen::Index r = 0; r < rank; ++r) v(pivots[r]) = -w(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Scalar>
MatrixX<Scalar> mat_inverse(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) throw shape_error("inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  MatrixX<Scalar> w(n, 2 * n);
  w.block(0, 0, n, n) = m;
  w.block(0, n, n, n) = MatrixX<Scalar>::Identity(n, n);
  std::vector<Eigen::Index> pivots;
  detail::echelonize<Scalar>(w, &pivots, nullptr);
  // invertible iff the pivots sit in the left block, one per column
  for (Eigen::Index i = 0; i < n; ++i)
    if (i >= static_cast<Eigen::Index>(pivots.size()) || pivots[i] != i)
      throw singular_error("matrix is singular");
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    Scalar inv = Scalar(1) / w(r, r);
    for (Eigen::Index j = r; j < 2 * n; ++j) w(r, j) = w(r, j) * inv;
    for (Eigen::Index i = 0; i < r; ++i) {
      Scalar f = w(i, r);
      if (f == Scalar(0)) continue;
      for (Eigen::Index j = r; j < 2 * n; ++j) w(i, j) -= f * w(r, j);
    }
  }
  return w.block(0, n, n, n);
}

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
// Classical pivoting with full reduction; inputs are tiny.
struct SmithResult {
  ZMatrix u, d, v;
};
SmithResult smith_normal_form(const ZMatrix& a);

// Exact determinant of an integer matrix (via the field embedding).
Integer int_det(const ZMatrix& m);

// Coefficients of det(xI - A), constant term first. Faddeev-LeVerrier;
// all divisions are exact over Z.
std::vector<Integer> char_poly(const ZMatrix& a);

}  // namespace t3dt
