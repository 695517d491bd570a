#include "tautheight/calculus/heights.hpp"

#include "tautheight/errors.hpp"

namespace tautheight::calculus {

std::string HeightCoefficients::identity() const {
  return "h'(Z) = (" + format_fraction(a) + " <w,w> + " + format_fraction(b) +
         " sum_v phi(X_v) log Nv) / [k:Q] + " + format_fraction(c) + " h'(x_alpha)";
}

HeightCoefficients coefficients_from_vector(const IntersectionVector& n, const Integer& g_degree,
                                            int r, int genus) {
  if (genus < 2) throw InputError("genus must be at least 2");
  if (g_degree <= 0) throw InternalError("geometric degree must be positive");
  const Rational two_g_minus_two(2 * genus - 2);
  const Rational denom = Rational(2 * (r + 1)) * Rational(g_degree);
  HeightCoefficients out;
  out.a = (n.w + n.b / two_g_minus_two) / denom;
  out.b = n.p / denom;
  out.c = two_g_minus_two * n.b / (Rational(r + 1) * Rational(g_degree));
  out.geometric_degree = g_degree;
  out.arithmetic_vector = n;
  return out;
}

HeightCoefficients height_coefficients(const std::vector<long>& m, int genus,
                                       const ExpansionOptions& options) {
  const IntersectionVector n = arithmetic_intersection(m, genus, options);
  const Integer g_degree = geometric_degree(m, genus, options);
  return coefficients_from_vector(n, g_degree, static_cast<int>(m.size()), genus);
}

}  // namespace tautheight::calculus
