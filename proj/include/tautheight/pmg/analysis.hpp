#ifndef TAUTHEIGHT_PMG_ANALYSIS_HPP
#define TAUTHEIGHT_PMG_ANALYSIS_HPP

#include <map>
#include <optional>
#include <vector>

#include "tautheight/linalg.hpp"
#include "tautheight/pmg/graph.hpp"

namespace tautheight::pmg {

/// Point masses at vertices plus a constant density on each edge.
struct Measure {
  std::vector<Rational> point_masses;  // indexed by vertex
  std::vector<Rational> densities;     // indexed by edge

  Rational total_mass(const PolarizedMetrizedGraph& graph) const;
};

/// c0 + c1 t + c2 t^2 for t in [0, length], t measured from the edge's u end.
struct EdgeQuadratic {
  Rational c0;
  Rational c1;
  Rational c2;

  Rational value(const Rational& t) const { return c0 + t * (c1 + t * c2); }
  Rational derivative(const Rational& t) const { return c1 + 2 * c2 * t; }
  /// Integral over [0, length].
  Rational integral(const Rational& length) const;

  /// The quadratic through (0, f0), (L/2, fmid), (L, f1).
  static EdgeQuadratic from_samples(const Rational& f0, const Rational& fmid, const Rational& f1,
                                    const Rational& length);
};

/// A point of the graph: arclength t along an edge from its u end.
struct GraphPoint {
  std::size_t edge;
  Rational t;
};

struct InvariantReport {
  Rational delta;
  Rational tau;
  std::optional<Rational> epsilon;  // undefined for g = 0
  std::optional<Rational> phi;
  Rational alpha;
  std::map<long, Rational> delta_i;  // keys 0..floor(g/2)
};

/// Exact analysis of one pm-graph.
///
/// Every edge, self-loops included, is cut into four equal pieces; one
/// fraction-free solve of the grounded Laplacian of that refinement yields
/// the resistance between any two of the sample points (vertices and the
/// quarter points of each edge). All integrands used below are quadratic
/// on each half edge, so Simpson's rule on the halves is exact.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(PolarizedMetrizedGraph graph);

  const PolarizedMetrizedGraph& graph() const { return graph_; }

  /// Resistance between vertices.
  Rational resistance(std::size_t u, std::size_t v) const;
  /// Resistance from a vertex to the point at k/4 of an edge, k = 0..4.
  Rational resistance_to_sample(std::size_t vertex, std::size_t edge, int k) const;

  const Measure& canonical_measure() const { return canonical_; }
  /// Throws InputError for g = 0.
  const Measure& admissible_measure() const;

  /// r(x, .) on every edge for a vertex x.
  std::vector<EdgeQuadratic> resistance_profile(std::size_t vertex) const;

  /// theta(x) = int r(x, y) dmu_a(y) at a vertex.
  Rational theta(std::size_t vertex) const;
  /// C = 1/2 int theta dmu_a.
  Rational green_constant() const;
  /// g_mu(x, x) on every edge.
  std::vector<EdgeQuadratic> green_diagonal() const;
  /// g_mu(u, v) for vertices.
  Rational green_value(std::size_t u, std::size_t v) const;
  /// int g_mu(x, y) dmu_a(y) for a vertex x; zero by construction.
  Rational green_mass(std::size_t vertex) const;

  /// 1/2 int r(x, y) dmu_can(y) with x the given vertex.
  Rational tau_at(std::size_t vertex) const;

  /// int f d(mu) for a function given by its edge quadratics and vertex values.
  Rational integrate(const std::vector<Rational>& vertex_values,
                     const std::vector<EdgeQuadratic>& edge_values, const Measure& mu) const;

  /// epsilon via the Green diagonal.
  Rational epsilon() const;
  /// epsilon via sum_v K(v) theta(v).
  Rational epsilon_dual() const;
  Rational phi() const;
  /// 2g g_mu(x, K) + r(x, K) at a vertex x.
  Rational moriwaki_value(std::size_t vertex) const;

  /// delta_i keyed by type 0..floor(g/2).
  std::map<long, Rational> delta_types() const;

  InvariantReport invariants() const;

 private:
  std::size_t node(std::size_t edge, int k) const;
  Rational node_resistance(std::size_t i, std::size_t j) const;
  // Integral over edge e of r(x, .), x a refinement node.
  Rational edge_integral_from(std::size_t x, std::size_t edge) const;
  Rational theta_node(std::size_t x) const;

  PolarizedMetrizedGraph graph_;
  linalg::RationalMatrix potentials_;  // inverse of the Laplacian grounded at node 0
  Measure canonical_;
  std::optional<Measure> admissible_;
  std::vector<Rational> theta_vertex_;
  std::vector<Rational> theta_mid_;
  Rational green_constant_;
};

Measure canonical_measure(const PolarizedMetrizedGraph& graph);
Measure admissible_measure(const PolarizedMetrizedGraph& graph);
std::vector<EdgeQuadratic> green_diagonal(const PolarizedMetrizedGraph& graph);
/// g_mu(x, y) for arbitrary points, via subdivision at x and y.
Rational green_value(const PolarizedMetrizedGraph& graph, const GraphPoint& x,
                     const GraphPoint& y);
Rational tau(const PolarizedMetrizedGraph& graph);
InvariantReport invariants(const PolarizedMetrizedGraph& graph);

/// Lower bound c(g) delta_0 + sum_{i>=1} 2i(g-i)/g delta_i for phi, g >= 2.
Rational cinkir_bound(const InvariantReport& report, long genus);
Rational cinkir_constant(long genus);

}  // namespace tautheight::pmg

#endif  // TAUTHEIGHT_PMG_ANALYSIS_HPP
