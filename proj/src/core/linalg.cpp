#include "tautheight/linalg.hpp"

#include <utility>

namespace tautheight::linalg {

namespace {

// Scales each row of [a | b] to integers.
IntegerMatrix clear_denominators(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  const std::size_t width = a.cols() + b.cols();
  IntegerMatrix out(n, width);
  for (std::size_t r = 0; r < n; ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < width; ++c) {
      const Rational& v = c < a.cols() ? a(r, c) : b(r, c - a.cols());
      out(r, c) = v.get_num() * (scale / v.get_den());
    }
  }
  return out;
}

// In-place Bareiss on the leading n columns. Returns the sign of the row
// permutation, or 0 if a zero pivot column was met.
int bareiss(IntegerMatrix& m, std::size_t n) {
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign;
}

}  // namespace

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) {
    throw std::invalid_argument("solve: dimension mismatch");
  }
  const std::size_t n = a.rows();
  IntegerMatrix m = clear_denominators(a, b);
  if (bareiss(m, n) == 0) throw SingularMatrixError("solve: singular matrix");

  RationalMatrix x(n, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(m(ii, n + col));
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m(ii, j)) * x(j, col);
      acc /= Rational(m(ii, ii));
      x(ii, col) = acc;
    }
  }
  return x;
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Rational scale = 1;
  RationalMatrix empty(n, 0);
  IntegerMatrix m = clear_denominators(a, empty);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a(r, c) != 0) {
        // row r was multiplied by m(r,c)/a(r,c)
        scale *= Rational(m(r, c)) / a(r, c);
        break;
      }
    }
  }
  const int sign = bareiss(m, n);
  if (sign == 0) return 0;
  Rational det(m(n - 1, n - 1));
  det *= sign;
  return det / scale;
}

}  // namespace tautheight::linalg
