#pragma once

// Exact scalar types and the small amount of dense linear algebra the
// library needs. Dense matrices are plain Eigen matrices over a
// multiprecision scalar; everything is templated on that scalar.
//
// Boost.Multiprecision expression templates do not combine with Eigen's
// product kernels under C++20, so products go through lazyProduct().

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sigmakit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Parses `p`, `-p`, `p/q` with optional leading sign. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Prints `p` for integers and `p/q` otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

template <typename Scalar>
DenseMatrix<Scalar> multiply(const DenseMatrix<Scalar>& lhs,
                             const DenseMatrix<Scalar>& rhs) {
  return lhs.lazyProduct(rhs);
}

/// Exact determinant by fraction-free (Bareiss) elimination. Every
/// intermediate division is exact, so the scalar may be Integer.
template <typename Scalar>
Scalar determinant(DenseMatrix<Scalar> m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index size = m.rows();
  if (size == 0)
    return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < size; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < size && m(swap_row, k) == 0)
        ++swap_row;
      if (swap_row == size)
        return Scalar(0);
      m.row(k).swap(m.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < size; ++i) {
      for (Eigen::Index j = k + 1; j < size; ++j) {
        Scalar value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = Scalar(value / previous);
      }
    }
    previous = m(k, k);
  }
  return Scalar(sign * m(size - 1, size - 1));
}

/// Rank over the rationals by Gaussian elimination. Serves as the
/// independent oracle for Smith normal form rank checks.
template <typename Scalar>
std::size_t rational_rank(const DenseMatrix<Scalar>& input) {
  DenseMatrix<Rational> m = input.template cast<Rational>();
  std::size_t rank = 0;
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    Eigen::Index found = pivot_row;
    while (found < m.rows() && m(found, col) == 0)
      ++found;
    if (found == m.rows())
      continue;
    m.row(pivot_row).swap(m.row(found));
    for (Eigen::Index i = pivot_row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0)
        continue;
      Rational factor = m(i, col) / m(pivot_row, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        m(i, j) -= factor * m(pivot_row, j);
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

/// Solves a square nonsingular rational system exactly.
DenseVector<Rational> solve_exact(DenseMatrix<Rational> a, DenseVector<Rational> b);

}  // namespace sigmakit
