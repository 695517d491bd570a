#ifndef TAUTHEIGHT_PMG_GRAPH_HPP
#define TAUTHEIGHT_PMG_GRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tautheight/errors.hpp"
#include "tautheight/rational.hpp"

namespace tautheight::pmg {

/// Why a graph description was rejected.
enum class GraphErrorKind {
  DuplicateVertex,
  UnknownVertex,
  NegativeGenusMark,
  NonpositiveLength,
  Disconnected,
  NegativeCanonical,
  Empty,
};

std::string to_string(GraphErrorKind kind);

class GraphValidationError : public InputError {
 public:
  GraphValidationError(GraphErrorKind kind, const std::string& detail)
      : InputError(to_string(kind) + ": " + detail), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

struct Vertex {
  std::string id;
  int genus_mark = 0;  // q(v)
};

/// Edge between vertex indices u and v (u == v is a self-loop).
struct GraphEdge {
  std::size_t u;
  std::size_t v;
  Rational length;

  bool is_loop() const { return u == v; }
};

/// Connected metric graph with vertex genus marks q(v); the polarization is
/// K(v) = 2q(v) - 2 + valence(v), required to be nonnegative.
class PolarizedMetrizedGraph {
 public:
  /// Validates and builds; throws GraphValidationError.
  PolarizedMetrizedGraph(std::vector<Vertex> vertices, std::vector<GraphEdge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Index of the vertex with this id; throws GraphValidationError.
  std::size_t index_of(const std::string& id) const;

  /// Edge endpoints at the vertex; a self-loop counts twice.
  int valence(std::size_t vertex) const;
  int canonical_divisor(std::size_t vertex) const;
  long betti_number() const;
  long genus() const;
  Rational total_length() const;

  /// True if removing the edge disconnects its endpoints.
  bool is_bridge(std::size_t edge) const;
  /// Vertices reachable from the edge's u end once the edge is removed.
  std::vector<bool> side_without(std::size_t edge) const;

  /// Inserts a vertex with q = 0 at arclength t from the edge's u end. The
  /// edge keeps its index as the [u, new] piece; [new, v] is appended.
  /// Throws InputError unless 0 < t < length.
  PolarizedMetrizedGraph subdivide(std::size_t edge, const Rational& t) const;

  /// Every length multiplied by factor > 0.
  PolarizedMetrizedGraph scaled(const Rational& factor) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<GraphEdge> edges_;
};

/// Effective resistance between two vertices, edge resistance = length.
/// Exact solve of the Laplacian grounded at u.
Rational vertex_resistance(const PolarizedMetrizedGraph& graph, std::size_t u, std::size_t v);

/// Convenience constructors used throughout tests and the CLI.
namespace shapes {
/// One vertex with a self-loop of the given length.
PolarizedMetrizedGraph circle(const Rational& length, int genus_mark = 0);
/// Two vertices joined by one edge.
PolarizedMetrizedGraph segment(const Rational& length, int q_left, int q_right);
/// Two vertices joined by parallel edges.
PolarizedMetrizedGraph banana(const std::vector<Rational>& lengths, int q_left = 0,
                              int q_right = 0);
}  // namespace shapes

}  // namespace tautheight::pmg

#endif  // TAUTHEIGHT_PMG_GRAPH_HPP
