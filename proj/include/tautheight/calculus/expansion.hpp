#ifndef TAUTHEIGHT_CALCULUS_EXPANSION_HPP
#define TAUTHEIGHT_CALCULUS_EXPANSION_HPP

#include <functional>
#include <vector>

#include "tautheight/calculus/generators.hpp"
#include "tautheight/calculus/intersection.hpp"
#include "tautheight/calculus/loop_graph.hpp"

namespace tautheight::calculus {

/// Largest vertex count the expansion accepts. At 7 vertices the full
/// generator set has 35 elements and the (r+1)-fold product 1.2e8 terms.
inline constexpr int kMaxVertices = 7;

struct ExpansionTerm {
  LoopLabelledGraph graph;
  Rational coefficient;
};

/// Visits every multiset of size n over the generators, materialized as a
/// loop-labelled graph on {1..r}, with coefficient
/// n! / prod(k_s!) * prod(weight_s^k_s).
void for_each_term(const GeneratorSystem& system, int n,
                   const std::function<void(const LoopLabelledGraph&, const Rational&)>& visit);

std::vector<ExpansionTerm> expand(const GeneratorSystem& system, int n);

struct ExpansionOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// The arithmetic sum split by minimal shape: coefficients of W = <w,w>,
/// B = <b,w> and T = <D,D,D> before T is expanded.
struct BasisSums {
  Rational w;
  Rational b;
  Rational t;
};

BasisSums expand_and_evaluate_basis(const GeneratorSystem& system, int n,
                                    const ExpansionOptions& options = {});

/// Sum of coefficient * evaluate(graph) over the n-fold expansion. Throws
/// CapacityError above kMaxVertices.
IntersectionVector expand_and_evaluate(const GeneratorSystem& system, int n,
                                       const ExpansionOptions& options = {});

/// Sum of coefficient * evaluate_geometric(graph) over the n-fold expansion.
Integer expand_and_evaluate_geometric(const GeneratorSystem& system, int n,
                                      const ExpansionOptions& options = {});

/// <M^{r+1} | X^r> in the basis (W, Phi, B).
IntersectionVector arithmetic_intersection(const std::vector<long>& m, int genus,
                                           const ExpansionOptions& options = {});

/// Top self-intersection of the geometric class of M on X^r; equals
/// 2^r deg(f) deg_L(Z). Throws InternalError if not positive.
Integer geometric_degree(const std::vector<long>& m, int genus,
                         const ExpansionOptions& options = {});

}  // namespace tautheight::calculus

#endif  // TAUTHEIGHT_CALCULUS_EXPANSION_HPP
