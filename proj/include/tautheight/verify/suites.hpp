#ifndef TAUTHEIGHT_VERIFY_SUITES_HPP
#define TAUTHEIGHT_VERIFY_SUITES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tautheight/verify/report.hpp"

namespace tautheight::verify {

/// "2..5", "3" or "2,4,6"; every entry must be >= 2.
std::vector<int> parse_g_range(std::string_view text);

/// m = (1): (1/(8(g-1)), 0, (g-1)/g).
VerificationReport curve_checks(int g);
/// m = (1,-1): ((3g-1)/(12g(g-1)), -1/(6g(g-1)), 0).
VerificationReport difference_surface_checks(int g);
/// m = (1,1): ((3g^2-8g-1)/(12g(g-1)^2), 1/(6g(g-1)), 4(g-2)/g).
VerificationReport square_checks(int g);
/// m = all-ones of length g-1: (a, b) = (1/(24g), 1/(12g)) for g >= 3; a
/// skip entry for g = 2. Throws CapacityError when g - 1 exceeds the
/// expansion envelope.
VerificationReport theta_checks(int g);

VerificationReport closed_form_suite(const std::vector<int>& g_range);

struct WilmsResult {
  Rational raw;       // coefficient of T in the expansion
  Rational value;     // reported coefficient
  Rational expected;  // -g!(g-1)!/12
  bool normalized = false;
};

/// Coefficient of <D,D,D> in <(sum omega_i - sum Delta_ij)^g | X^{g-1}>,
/// 2 <= g <= 6.
///
/// For g = 2 the expansion has a single vertex and no T term, while W and
/// Phi are proportional (5W = 2Phi), so the coefficient is only defined up
/// to that relation. The reported value then comes from the representative
/// of 2g[k:Q]h'(Theta) whose W-coefficient is 1/12, the value that holds
/// for every g >= 3.
WilmsResult wilms_constant(int g);
VerificationReport wilms_suite(const std::vector<int>& g_range);

/// 3g(g-1)(V(F) - V(Z_2)) + (0, 0, 12(g-1)^2).
SymbolicHeightVector gross_schoen_vector(int g);
/// ((2g+1)/(2g-2), -1, 12(g-1)).
SymbolicHeightVector gross_schoen_expected(int g);
VerificationReport gross_schoen_consistency(int g);

struct DerivedBounds {
  Rational bogomolov;                 // -b/a for m = (1,-1)
  SymbolicHeightVector z2_bound;      // upper bound for h'(Z_2) with Phi eliminated
  Rational w_factor;                  // z2_bound.w / a(Z_1)
  Rational h_factor;                  // z2_bound.h / c(Z_1)
};

DerivedBounds derived_bound_values(int g);
VerificationReport derived_bounds(int g);

/// Criteria aggregated: closed forms, Wilms constant (g <= 6), Gross-Schoen
/// consistency and the derived bounds over g_range.
VerificationReport paper_suite(const std::vector<int>& g_range);

/// "closed-form", "wilms", "gross-schoen", "bounds" or "paper".
VerificationReport run_suite(std::string_view name, const std::vector<int>& g_range);
std::vector<std::string> suite_names();

}  // namespace tautheight::verify

#endif  // TAUTHEIGHT_VERIFY_SUITES_HPP
