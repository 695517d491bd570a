#ifndef TAUTHEIGHT_LINALG_HPP
#define TAUTHEIGHT_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tautheight/rational.hpp"

namespace tautheight::linalg {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
 * Exact solution of A X = B by Bareiss fraction-free elimination.
 *
 * Each row of [A | B] is cleared of denominators (rows scaled by the lcm of
 * their denominators), the integer system is reduced with the one-step
 * Bareiss recurrence, and the triangular result is back-substituted over Q.
 * Every intermediate pivot is a minor of the scaled matrix, so integer entry
 * growth stays polynomial.
 *
 * Throws SingularMatrixError if A is singular.
 */
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

/// Determinant by the same elimination.
Rational determinant(const RationalMatrix& a);

}  // namespace tautheight::linalg

#endif  // TAUTHEIGHT_LINALG_HPP
