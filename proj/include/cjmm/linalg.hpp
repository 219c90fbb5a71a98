#pragma once

#include <Eigen/Core>
#include <utility>

#include "cjmm/error.hpp"
#include "cjmm/rational.hpp"

namespace cjmm {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Solves A X = B exactly by Gauss-Jordan elimination over a field.
/// Throws InternalConsistency if A is singular.
template <typename Scalar>
Matrix<Scalar> solve_exact(Matrix<Scalar> a, Matrix<Scalar> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) {
    throw Error(ErrorKind::InvalidArgument, "solve_exact: shape mismatch");
  }
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == n) {
      throw Error(ErrorKind::InternalConsistency, "singular linear system");
    }
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      b.row(pivot).swap(b.row(col));
    }
    const Scalar inv = Scalar(1) / a(col, col);
    for (Eigen::Index j = col; j < n; ++j) {
      a(col, j) *= inv;
    }
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      b(col, j) *= inv;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) {
        continue;
      }
      const Scalar f = a(r, col);
      for (Eigen::Index j = col; j < n; ++j) {
        a(r, j) -= f * a(col, j);
      }
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        b(r, j) -= f * b(col, j);
      }
    }
  }
  return b;
}

/// V(i, j) = nodes(i)^j.
template <typename Scalar>
Matrix<Scalar> vandermonde(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& nodes, Eigen::Index powers) {
  Matrix<Scalar> v(nodes.size(), powers);
  for (Eigen::Index i = 0; i < nodes.size(); ++i) {
    Scalar p = Scalar(1);
    for (Eigen::Index j = 0; j < powers; ++j) {
      v(i, j) = p;
      p = p * nodes(i);
    }
  }
  return v;
}

/// Fraction-free (Bareiss) determinant over an integral domain. `divide`
/// must return the exact quotient of its arguments.
template <typename Scalar, typename ExactDivide>
Scalar bareiss_determinant(Matrix<Scalar> m, const Scalar& zero, const Scalar& one,
                           ExactDivide divide) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) {
    throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  }
  if (n == 0) {
    return one;
  }
  bool negate = false;
  Scalar prev = one;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == zero) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == zero) {
        ++swap_row;
      }
      if (swap_row == n) {
        return zero;
      }
      m.row(k).swap(m.row(swap_row));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = divide(Scalar(m(i, j) * m(k, k) - m(i, k) * m(k, j)), prev);
      }
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

}  // namespace cjmm
