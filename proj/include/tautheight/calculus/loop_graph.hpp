#ifndef TAUTHEIGHT_CALCULUS_LOOP_GRAPH_HPP
#define TAUTHEIGHT_CALCULUS_LOOP_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tautheight/calculus/intersection.hpp"
#include "tautheight/rational.hpp"

namespace tautheight::calculus {

/// Label of a loop: omega, -omega or beta.
struct LoopLabel {
  enum class Base { Omega, Beta };
  Base base = Base::Omega;
  int sign = 1;

  static LoopLabel omega() { return {Base::Omega, 1}; }
  static LoopLabel minus_omega() { return {Base::Omega, -1}; }
  static LoopLabel beta() { return {Base::Beta, 1}; }

  /// Degree on the curve: 2g-2, 2-2g or 2.
  Integer degree(int genus) const;

  std::string name() const;

  friend bool operator==(const LoopLabel&, const LoopLabel&) = default;
};

struct Loop {
  int vertex;
  LoopLabel label;
  friend bool operator==(const Loop&, const Loop&) = default;
};

/// Non-loop edge {u, v}; stored with u < v. Stands for a Delta_uv factor.
struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Multigraph on a fixed finite vertex set whose loops carry labels.
class LoopLabelledGraph {
 public:
  LoopLabelledGraph() = default;
  explicit LoopLabelledGraph(std::vector<int> vertices);

  void add_vertex(int vertex);
  void add_loop(int vertex, LoopLabel label);
  void add_edge(int u, int v);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Loop>& loops() const { return loops_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(int vertex) const;

  /// Edge endpoints at the vertex plus twice the number of loops there.
  int degree(int vertex) const;
  int loop_count(int vertex) const;

  /// |V| - |loops| - |edges|.
  long euler_characteristic() const;

  /// Vertex sets of the connected components, each sorted, ordered by
  /// smallest vertex.
  std::vector<std::vector<int>> components() const;

  /// Restriction to a vertex subset (loops and edges with all ends inside).
  LoopLabelledGraph induced(const std::vector<int>& vertex_subset) const;

  /// Disjoint union; throws InputError if the vertex sets overlap.
  static LoopLabelledGraph disjoint_union(const LoopLabelledGraph& a, const LoopLabelledGraph& b);

  /// Same graph up to reordering of loops and edges.
  bool same_as(const LoopLabelledGraph& other) const;

  std::string to_string() const;

  // Mutation used by the contraction rules.
  void remove_vertex(int vertex);
  void remove_edge_at(std::size_t index);

 private:
  std::vector<int> vertices_;
  std::vector<Loop> loops_;
  std::vector<Edge> edges_;
};

/// A single contraction step pivoting on one loop-free vertex.
struct Contraction {
  enum class Rule {
    DeleteLeaf,       // degree 1: drop the vertex and its edge
    SmoothPath,       // degree 2, edges ij and jk with i != k: replace by ik
    ParallelToLoop,   // degree 2, both edges to the same j: one (-omega) loop at j
  };
  Rule rule;
  int vertex;
};

/// All contraction steps applicable to the graph, one per eligible vertex.
std::vector<Contraction> applicable_contractions(const LoopLabelledGraph& graph);

/// Returns the contraction applicable at `vertex`, if any.
std::optional<Contraction> contraction_at(const LoopLabelledGraph& graph, int vertex);

/// Applies one step. The step must be applicable (as returned above).
void apply_contraction(LoopLabelledGraph& graph, const Contraction& step);

/// Contracts until no rule applies; returns the number of steps taken.
std::size_t reduce_in_place(LoopLabelledGraph& graph);

LoopLabelledGraph reduce(const LoopLabelledGraph& graph);

/// Shape of a minimal connected component.
enum class MinimalShape {
  Point,        // one bare vertex (chi = 1)
  SingleLoop,   // one vertex, one loop (chi = 0)
  Dumbbell,     // two looped vertices joined by an edge (chi = -1)
  FigureEight,  // one vertex, two loops (chi = -1)
  Theta,        // two vertices, three parallel edges (chi = -1)
  Other,
};

MinimalShape classify_minimal(const LoopLabelledGraph& component);

/// Value of a graph with chi = -1 in the arithmetic calculus, as a vector in
/// the basis (W, Phi, B). Throws InternalError on an unexpected minimal graph.
IntersectionVector evaluate(const LoopLabelledGraph& graph, int genus);

/// Value of a graph with chi = 0 as a geometric intersection number on X^r.
Integer evaluate_geometric(const LoopLabelledGraph& graph, int genus);

namespace detail {

/// Arithmetic evaluation factored as scalar * basis element, so the hot loop
/// avoids rational vectors.
struct FactoredValue {
  enum class Basis { Zero, W, B, T };
  Basis basis = Basis::Zero;
  Integer scalar = 0;
};

/// Evaluates in place (the graph is reduced as a side effect).
FactoredValue evaluate_factored(LoopLabelledGraph& graph, int genus);
Integer evaluate_geometric_in_place(LoopLabelledGraph& graph, int genus);

}  // namespace detail

}  // namespace tautheight::calculus

#endif  // TAUTHEIGHT_CALCULUS_LOOP_GRAPH_HPP
