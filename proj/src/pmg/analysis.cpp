#include "tautheight/pmg/analysis.hpp"

#include <algorithm>

namespace tautheight::pmg {

Rational Measure::total_mass(const PolarizedMetrizedGraph& graph) const {
  Rational total = 0;
  for (const auto& m : point_masses) total += m;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    total += densities[e] * graph.edges()[e].length;
  }
  return total;
}

Rational EdgeQuadratic::integral(const Rational& length) const {
  return length * (c0 + length * (c1 / 2 + length * c2 / 3));
}

EdgeQuadratic EdgeQuadratic::from_samples(const Rational& f0, const Rational& fmid,
                                          const Rational& f1, const Rational& length) {
  EdgeQuadratic q;
  q.c0 = f0;
  q.c2 = 2 * (f0 - 2 * fmid + f1) / (length * length);
  q.c1 = (f1 - f0) / length - q.c2 * length;
  return q;
}

GraphAnalysis::GraphAnalysis(PolarizedMetrizedGraph graph) : graph_(std::move(graph)) {
  const std::size_t nv = graph_.vertex_count();
  const std::size_t ne = graph_.edge_count();
  const std::size_t n = nv + 3 * ne;

  potentials_ = linalg::RationalMatrix(n, n);
  if (n > 1) {
    linalg::RationalMatrix lap(n - 1, n - 1);
    auto connect = [&](std::size_t a, std::size_t b, const Rational& c) {
      if (a) lap(a - 1, a - 1) += c;
      if (b) lap(b - 1, b - 1) += c;
      if (a && b) {
        lap(a - 1, b - 1) -= c;
        lap(b - 1, a - 1) -= c;
      }
    };
    for (std::size_t e = 0; e < ne; ++e) {
      const Rational c = 4 / graph_.edges()[e].length;
      for (int k = 0; k < 4; ++k) connect(node(e, k), node(e, k + 1), c);
    }
    const auto inverse = linalg::solve(lap, linalg::RationalMatrix::identity(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 1; j < n; ++j) potentials_(i, j) = inverse(i - 1, j - 1);
    }
  }

  canonical_.point_masses.resize(nv);
  canonical_.densities.resize(ne);
  for (std::size_t v = 0; v < nv; ++v) {
    canonical_.point_masses[v] = 1 - make_rational(graph_.valence(v), 2);
  }
  // 1/(l + R_e) = (l - r(u, v)) / l^2, with r taken in the whole graph.
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& edge = graph_.edges()[e];
    canonical_.densities[e] =
        (edge.length - node_resistance(edge.u, edge.v)) / (edge.length * edge.length);
  }

  const long g = graph_.genus();
  if (g == 0) return;
  Measure mu;
  mu.point_masses.resize(nv);
  mu.densities.resize(ne);
  for (std::size_t v = 0; v < nv; ++v) {
    mu.point_masses[v] =
        (graph_.canonical_divisor(v) + 2 * canonical_.point_masses[v]) / Rational(2 * g);
  }
  for (std::size_t e = 0; e < ne; ++e) mu.densities[e] = canonical_.densities[e] / Rational(g);
  admissible_ = std::move(mu);

  theta_vertex_.resize(nv);
  theta_mid_.resize(ne);
  for (std::size_t v = 0; v < nv; ++v) theta_vertex_[v] = theta_node(v);
  for (std::size_t e = 0; e < ne; ++e) theta_mid_[e] = theta_node(node(e, 2));

  Rational c = 0;
  for (std::size_t v = 0; v < nv; ++v) c += admissible_->point_masses[v] * theta_vertex_[v];
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& edge = graph_.edges()[e];
    c += admissible_->densities[e] * edge.length / 6 *
         (theta_vertex_[edge.u] + 4 * theta_mid_[e] + theta_vertex_[edge.v]);
  }
  green_constant_ = c / 2;
}

std::size_t GraphAnalysis::node(std::size_t edge, int k) const {
  const auto& e = graph_.edges()[edge];
  if (k == 0) return e.u;
  if (k == 4) return e.v;
  return graph_.vertex_count() + 3 * edge + static_cast<std::size_t>(k - 1);
}

Rational GraphAnalysis::node_resistance(std::size_t i, std::size_t j) const {
  return potentials_(i, i) + potentials_(j, j) - 2 * potentials_(i, j);
}

Rational GraphAnalysis::resistance(std::size_t u, std::size_t v) const {
  if (u >= graph_.vertex_count() || v >= graph_.vertex_count()) {
    throw InputError("vertex index out of range");
  }
  return node_resistance(u, v);
}

Rational GraphAnalysis::resistance_to_sample(std::size_t vertex, std::size_t edge, int k) const {
  if (vertex >= graph_.vertex_count() || edge >= graph_.edge_count() || k < 0 || k > 4) {
    throw InputError("sample point out of range");
  }
  return node_resistance(vertex, node(edge, k));
}

const Measure& GraphAnalysis::admissible_measure() const {
  if (!admissible_) throw InputError("admissible measure needs genus at least 1");
  return *admissible_;
}

Rational GraphAnalysis::edge_integral_from(std::size_t x, std::size_t edge) const {
  const Rational half = graph_.edges()[edge].length / 2;
  Rational r[5];
  for (int k = 0; k < 5; ++k) r[k] = node_resistance(x, node(edge, k));
  return half / 6 * (r[0] + 4 * r[1] + 2 * r[2] + 4 * r[3] + r[4]);
}

Rational GraphAnalysis::theta_node(std::size_t x) const {
  Rational total = 0;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    total += admissible_->point_masses[v] * node_resistance(x, v);
  }
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    total += admissible_->densities[e] * edge_integral_from(x, e);
  }
  return total;
}

std::vector<EdgeQuadratic> GraphAnalysis::resistance_profile(std::size_t vertex) const {
  std::vector<EdgeQuadratic> out;
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    out.push_back(EdgeQuadratic::from_samples(resistance_to_sample(vertex, e, 0),
                                              resistance_to_sample(vertex, e, 2),
                                              resistance_to_sample(vertex, e, 4),
                                              graph_.edges()[e].length));
  }
  return out;
}

Rational GraphAnalysis::theta(std::size_t vertex) const {
  admissible_measure();
  return theta_vertex_.at(vertex);
}

Rational GraphAnalysis::green_constant() const {
  admissible_measure();
  return green_constant_;
}

std::vector<EdgeQuadratic> GraphAnalysis::green_diagonal() const {
  admissible_measure();
  std::vector<EdgeQuadratic> out;
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    const auto& edge = graph_.edges()[e];
    out.push_back(EdgeQuadratic::from_samples(theta_vertex_[edge.u] - green_constant_,
                                              theta_mid_[e] - green_constant_,
                                              theta_vertex_[edge.v] - green_constant_,
                                              edge.length));
  }
  return out;
}

Rational GraphAnalysis::green_value(std::size_t u, std::size_t v) const {
  return (theta(u) + theta(v) - resistance(u, v)) / 2 - green_constant_;
}

Rational GraphAnalysis::green_mass(std::size_t vertex) const {
  const Measure& mu = admissible_measure();
  Rational total = 0;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    total += mu.point_masses[v] * green_value(vertex, v);
  }
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    const auto& edge = graph_.edges()[e];
    const Rational theta_integral =
        edge.length / 6 * (theta_vertex_[edge.u] + 4 * theta_mid_[e] + theta_vertex_[edge.v]);
    const Rational g_integral =
        (theta_vertex_[vertex] * edge.length + theta_integral - edge_integral_from(vertex, e)) /
            2 -
        green_constant_ * edge.length;
    total += mu.densities[e] * g_integral;
  }
  return total;
}

Rational GraphAnalysis::tau_at(std::size_t vertex) const {
  if (vertex >= graph_.vertex_count()) throw InputError("vertex index out of range");
  Rational total = 0;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    total += canonical_.point_masses[v] * node_resistance(vertex, v);
  }
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    total += canonical_.densities[e] * edge_integral_from(vertex, e);
  }
  return total / 2;
}

Rational GraphAnalysis::integrate(const std::vector<Rational>& vertex_values,
                                  const std::vector<EdgeQuadratic>& edge_values,
                                  const Measure& mu) const {
  Rational total = 0;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    total += mu.point_masses[v] * vertex_values.at(v);
  }
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    total += mu.densities[e] * edge_values.at(e).integral(graph_.edges()[e].length);
  }
  return total;
}

namespace {

// int g_mu(x, x) d(s mu_a + t delta_K)
Rational diagonal_against(const GraphAnalysis& a, const Rational& s, const Rational& t) {
  const auto& graph = a.graph();
  const Measure& mu = a.admissible_measure();
  Measure combo;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    combo.point_masses.push_back(s * mu.point_masses[v] + t * graph.canonical_divisor(v));
  }
  for (const auto& d : mu.densities) combo.densities.push_back(s * d);
  std::vector<Rational> at_vertices;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    at_vertices.push_back(a.theta(v) - a.green_constant());
  }
  return a.integrate(at_vertices, a.green_diagonal(), combo);
}

}  // namespace

Rational GraphAnalysis::epsilon() const {
  const long g = graph_.genus();
  return diagonal_against(*this, Rational(2 * g - 2), 1);
}

Rational GraphAnalysis::epsilon_dual() const {
  admissible_measure();
  Rational total = 0;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    total += graph_.canonical_divisor(v) * theta_vertex_[v];
  }
  return total;
}

Rational GraphAnalysis::phi() const {
  const long g = graph_.genus();
  return -graph_.total_length() / 4 + diagonal_against(*this, Rational(10 * g + 2), -1) / 4;
}

Rational GraphAnalysis::moriwaki_value(std::size_t vertex) const {
  const long g = graph_.genus();
  Rational total = 0;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    const int k = graph_.canonical_divisor(v);
    if (k == 0) continue;
    total += k * (2 * g * green_value(vertex, v) + resistance(vertex, v));
  }
  return total;
}

std::map<long, Rational> GraphAnalysis::delta_types() const {
  const long g = graph_.genus();
  std::map<long, Rational> out;
  for (long i = 0; i <= g / 2; ++i) out[i] = 0;
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    const auto& edge = graph_.edges()[e];
    long type = 0;
    if (graph_.is_bridge(e)) {
      const auto side = graph_.side_without(e);
      long part = 1;
      for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
        if (side[v]) part += graph_.vertices()[v].genus_mark - 1;
      }
      for (std::size_t f = 0; f < graph_.edge_count(); ++f) {
        if (f != e && side[graph_.edges()[f].u]) ++part;
      }
      type = std::min(part, g - part);
    }
    out[type] += edge.length;
  }
  return out;
}

InvariantReport GraphAnalysis::invariants() const {
  InvariantReport report;
  report.delta = graph_.total_length();
  report.tau = tau_at(0);
  if (admissible_) {
    report.epsilon = epsilon();
    report.phi = phi();
  }
  report.alpha = report.delta / 8 - report.tau / 2;
  report.delta_i = delta_types();
  return report;
}

Measure canonical_measure(const PolarizedMetrizedGraph& graph) {
  return GraphAnalysis(graph).canonical_measure();
}

Measure admissible_measure(const PolarizedMetrizedGraph& graph) {
  if (graph.genus() == 0) throw InputError("admissible measure needs genus at least 1");
  return GraphAnalysis(graph).admissible_measure();
}

std::vector<EdgeQuadratic> green_diagonal(const PolarizedMetrizedGraph& graph) {
  return GraphAnalysis(graph).green_diagonal();
}

namespace {

std::optional<std::size_t> as_vertex(const PolarizedMetrizedGraph& graph, const GraphPoint& p) {
  const auto& e = graph.edges()[p.edge];
  if (p.t == 0) return e.u;
  if (p.t == e.length) return e.v;
  return std::nullopt;
}

void check_point(const PolarizedMetrizedGraph& graph, const GraphPoint& p) {
  if (p.edge >= graph.edge_count()) throw InputError("edge index out of range");
  if (p.t < 0 || p.t > graph.edges()[p.edge].length) {
    throw InputError("point " + format_fraction(p.t) + " lies outside its edge");
  }
}

}  // namespace

Rational green_value(const PolarizedMetrizedGraph& graph, const GraphPoint& x,
                     const GraphPoint& y) {
  check_point(graph, x);
  check_point(graph, y);
  PolarizedMetrizedGraph g1 = graph;
  GraphPoint y1 = y;
  std::size_t xi;
  if (auto v = as_vertex(graph, x)) {
    xi = *v;
  } else {
    g1 = graph.subdivide(x.edge, x.t);
    xi = graph.vertex_count();
    if (y.edge == x.edge && y.t > x.t) y1 = {graph.edge_count(), y.t - x.t};
  }
  std::size_t yi;
  PolarizedMetrizedGraph g2 = g1;
  if (y.edge == x.edge && y.t == x.t) {
    yi = xi;
  } else if (auto v = as_vertex(g1, y1)) {
    yi = *v;
  } else {
    g2 = g1.subdivide(y1.edge, y1.t);
    yi = g1.vertex_count();
  }
  return GraphAnalysis(std::move(g2)).green_value(xi, yi);
}

Rational tau(const PolarizedMetrizedGraph& graph) { return GraphAnalysis(graph).tau_at(0); }

InvariantReport invariants(const PolarizedMetrizedGraph& graph) {
  return GraphAnalysis(graph).invariants();
}

Rational cinkir_constant(long genus) {
  if (genus < 2) throw InputError("the phi lower bound needs genus at least 2");
  if (genus == 2) return Rational(1, 27);
  Rational c((genus - 1) * (genus - 1), 2 * genus * (7 * genus + 5));
  c.canonicalize();
  return c;
}

Rational cinkir_bound(const InvariantReport& report, long genus) {
  Rational bound = cinkir_constant(genus) * report.delta_i.at(0);
  for (const auto& [i, length] : report.delta_i) {
    if (i == 0) continue;
    Rational w(2 * i * (genus - i), genus);
    w.canonicalize();
    bound += w * length;
  }
  return bound;
}

}  // namespace tautheight::pmg
