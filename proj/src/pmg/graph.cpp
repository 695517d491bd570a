#include "tautheight/pmg/graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "tautheight/linalg.hpp"

namespace tautheight::pmg {

std::string to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::DuplicateVertex:
      return "duplicate vertex";
    case GraphErrorKind::UnknownVertex:
      return "unknown vertex";
    case GraphErrorKind::NegativeGenusMark:
      return "negative genus mark";
    case GraphErrorKind::NonpositiveLength:
      return "nonpositive length";
    case GraphErrorKind::Disconnected:
      return "disconnected";
    case GraphErrorKind::NegativeCanonical:
      return "negative canonical divisor";
    case GraphErrorKind::Empty:
      return "empty graph";
  }
  return "invalid graph";
}

namespace {

// Vertices reachable from `start`, ignoring edge `skip` (npos: none).
std::vector<bool> reachable(std::size_t vertex_count, const std::vector<GraphEdge>& edges,
                            std::size_t start, std::size_t skip) {
  std::vector<std::vector<std::size_t>> adj(vertex_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e == skip || edges[e].is_loop()) continue;
    adj[edges[e].u].push_back(edges[e].v);
    adj[edges[e].v].push_back(edges[e].u);
  }
  std::vector<bool> seen(vertex_count, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

PolarizedMetrizedGraph::PolarizedMetrizedGraph(std::vector<Vertex> vertices,
                                               std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw GraphValidationError(GraphErrorKind::Empty, "no vertices");
  std::unordered_map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!ids.emplace(vertices_[i].id, i).second) {
      throw GraphValidationError(GraphErrorKind::DuplicateVertex, "'" + vertices_[i].id + "'");
    }
    if (vertices_[i].genus_mark < 0) {
      throw GraphValidationError(GraphErrorKind::NegativeGenusMark, "'" + vertices_[i].id + "'");
    }
  }
  for (auto& e : edges_) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) {
      throw GraphValidationError(GraphErrorKind::UnknownVertex, "edge endpoint out of range");
    }
    e.length.canonicalize();
    if (e.length <= 0) {
      throw GraphValidationError(GraphErrorKind::NonpositiveLength,
                                 "edge " + vertices_[e.u].id + "-" + vertices_[e.v].id +
                                     " has length " + format_fraction(e.length));
    }
  }
  const auto seen = reachable(vertices_.size(), edges_, 0, edges_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!seen[i]) {
      throw GraphValidationError(GraphErrorKind::Disconnected,
                                 "vertex '" + vertices_[i].id + "' is unreachable");
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (canonical_divisor(i) < 0) {
      throw GraphValidationError(GraphErrorKind::NegativeCanonical,
                                 "K('" + vertices_[i].id + "') = " +
                                     std::to_string(canonical_divisor(i)) +
                                     "; leaves need q >= 1");
    }
  }
}

std::size_t PolarizedMetrizedGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  throw GraphValidationError(GraphErrorKind::UnknownVertex, "'" + id + "'");
}

int PolarizedMetrizedGraph::valence(std::size_t vertex) const {
  int val = 0;
  for (const auto& e : edges_) val += (e.u == vertex) + (e.v == vertex);
  return val;
}

int PolarizedMetrizedGraph::canonical_divisor(std::size_t vertex) const {
  return 2 * vertices_[vertex].genus_mark - 2 + valence(vertex);
}

long PolarizedMetrizedGraph::betti_number() const {
  return static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) + 1;
}

long PolarizedMetrizedGraph::genus() const {
  long g = betti_number();
  for (const auto& v : vertices_) g += v.genus_mark;
  return g;
}

Rational PolarizedMetrizedGraph::total_length() const {
  Rational total = 0;
  for (const auto& e : edges_) total += e.length;
  return total;
}

bool PolarizedMetrizedGraph::is_bridge(std::size_t edge) const {
  const auto& e = edges_.at(edge);
  if (e.is_loop()) return false;
  return !side_without(edge)[e.v];
}

std::vector<bool> PolarizedMetrizedGraph::side_without(std::size_t edge) const {
  return reachable(vertices_.size(), edges_, edges_.at(edge).u, edge);
}

PolarizedMetrizedGraph PolarizedMetrizedGraph::subdivide(std::size_t edge,
                                                         const Rational& t) const {
  const GraphEdge& e = edges_.at(edge);
  if (t <= 0 || t >= e.length) {
    throw InputError("subdivision point " + format_fraction(t) + " not inside (0, " +
                     format_fraction(e.length) + ")");
  }
  std::vector<Vertex> vertices = vertices_;
  std::string id = vertices_[e.u].id + "~" + vertices_[e.v].id + "@" + format_fraction(t);
  while (std::any_of(vertices.begin(), vertices.end(),
                     [&](const Vertex& v) { return v.id == id; })) {
    id += "'";
  }
  const std::size_t w = vertices.size();
  vertices.push_back({id, 0});
  std::vector<GraphEdge> edges = edges_;
  edges[edge] = {e.u, w, t};
  edges.push_back({w, e.v, e.length - t});
  return PolarizedMetrizedGraph(std::move(vertices), std::move(edges));
}

PolarizedMetrizedGraph PolarizedMetrizedGraph::scaled(const Rational& factor) const {
  if (factor <= 0) throw InputError("scale factor must be positive");
  std::vector<GraphEdge> edges = edges_;
  for (auto& e : edges) e.length *= factor;
  return PolarizedMetrizedGraph(vertices_, std::move(edges));
}

Rational vertex_resistance(const PolarizedMetrizedGraph& graph, std::size_t u, std::size_t v) {
  const std::size_t n = graph.vertex_count();
  if (u >= n || v >= n) throw InputError("vertex index out of range");
  if (u == v) return 0;
  // Grounded Laplacian: drop row and column u.
  auto slot = [u](std::size_t i) { return i < u ? i : i - 1; };
  linalg::RationalMatrix lap(n - 1, n - 1);
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) continue;
    const Rational c = 1 / e.length;
    if (e.u != u) lap(slot(e.u), slot(e.u)) += c;
    if (e.v != u) lap(slot(e.v), slot(e.v)) += c;
    if (e.u != u && e.v != u) {
      lap(slot(e.u), slot(e.v)) -= c;
      lap(slot(e.v), slot(e.u)) -= c;
    }
  }
  linalg::RationalMatrix rhs(n - 1, 1);
  rhs(slot(v), 0) = 1;
  return linalg::solve(lap, rhs)(slot(v), 0);
}

namespace shapes {

PolarizedMetrizedGraph circle(const Rational& length, int genus_mark) {
  return PolarizedMetrizedGraph({{"v", genus_mark}}, {{0, 0, length}});
}

PolarizedMetrizedGraph segment(const Rational& length, int q_left, int q_right) {
  return PolarizedMetrizedGraph({{"a", q_left}, {"b", q_right}}, {{0, 1, length}});
}

PolarizedMetrizedGraph banana(const std::vector<Rational>& lengths, int q_left, int q_right) {
  std::vector<GraphEdge> edges;
  for (const auto& l : lengths) edges.push_back({0, 1, l});
  return PolarizedMetrizedGraph({{"a", q_left}, {"b", q_right}}, std::move(edges));
}

}  // namespace shapes

}  // namespace tautheight::pmg
