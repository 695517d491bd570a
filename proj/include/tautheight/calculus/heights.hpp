#ifndef TAUTHEIGHT_CALCULUS_HEIGHTS_HPP
#define TAUTHEIGHT_CALCULUS_HEIGHTS_HPP

#include <string>
#include <vector>

#include "tautheight/calculus/expansion.hpp"
#include "tautheight/calculus/intersection.hpp"

namespace tautheight::calculus {

/// Universal coefficients in
///
///   h'(Z_{m,alpha}) = (a <omega,omega> + b sum_v phi(X_v) log Nv) / [k:Q]
///                     + c h'(x_alpha),
///
/// together with the two expansion results they are derived from.
struct HeightCoefficients {
  Rational a;
  Rational b;
  Rational c;
  Integer geometric_degree;
  IntersectionVector arithmetic_vector;

  /// The identity above, with the coefficients filled in.
  std::string identity() const;
};

/// (a, b, c) for the tautological cycle Z_{m,alpha} in genus g.
///
/// With N = (w, p, b_B) = <M^{r+1}> and G the geometric degree:
///   a = (w + b_B / (2g-2)) / (2 (r+1) G)
///   b = p / (2 (r+1) G)
///   c = (2g-2) b_B / ((r+1) G)
/// The empty multi-index returns (0, 0, 0).
HeightCoefficients height_coefficients(const std::vector<long>& m, int genus,
                                       const ExpansionOptions& options = {});

/// Converts an arithmetic vector into (a, b, c) given r and G.
HeightCoefficients coefficients_from_vector(const IntersectionVector& n, const Integer& g_degree,
                                            int r, int genus);

}  // namespace tautheight::calculus

#endif  // TAUTHEIGHT_CALCULUS_HEIGHTS_HPP
