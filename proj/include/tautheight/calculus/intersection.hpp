#ifndef TAUTHEIGHT_CALCULUS_INTERSECTION_HPP
#define TAUTHEIGHT_CALCULUS_INTERSECTION_HPP

#include <string>

#include "tautheight/rational.hpp"

namespace tautheight::calculus {

/// w * <omega,omega> + p * sum_v phi(X_v) log Nv + b * <beta,omega>.
///
/// The triple diagonal <Delta,Delta,Delta> has no coordinate of its own; it
/// is stored through its expansion W - Phi. <beta,beta> vanishes.
struct IntersectionVector {
  Rational w;
  Rational p;
  Rational b;

  static IntersectionVector omega_omega() { return {1, 0, 0}; }
  static IntersectionVector beta_omega() { return {0, 0, 1}; }
  static IntersectionVector triple_diagonal() { return {1, -1, 0}; }

  IntersectionVector& operator+=(const IntersectionVector& o) {
    w += o.w;
    p += o.p;
    b += o.b;
    return *this;
  }
  IntersectionVector& operator*=(const Rational& s) {
    w *= s;
    p *= s;
    b *= s;
    return *this;
  }
  friend IntersectionVector operator+(IntersectionVector a, const IntersectionVector& b) {
    return a += b;
  }
  friend IntersectionVector operator-(IntersectionVector a, const IntersectionVector& b) {
    a.w -= b.w;
    a.p -= b.p;
    a.b -= b.b;
    return a;
  }
  friend IntersectionVector operator*(const Rational& s, IntersectionVector a) { return a *= s; }
  friend bool operator==(const IntersectionVector& a, const IntersectionVector& b) {
    return a.w == b.w && a.p == b.p && a.b == b.b;
  }

  bool is_zero() const { return w == 0 && p == 0 && b == 0; }

  std::string to_string() const {
    return "(" + format_fraction(w) + ", " + format_fraction(p) + ", " + format_fraction(b) + ")";
  }
};

}  // namespace tautheight::calculus

#endif  // TAUTHEIGHT_CALCULUS_INTERSECTION_HPP
