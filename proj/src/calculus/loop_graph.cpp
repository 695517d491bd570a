#include "tautheight/calculus/loop_graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "tautheight/errors.hpp"

namespace tautheight::calculus {

Integer LoopLabel::degree(int genus) const {
  if (base == Base::Beta) return 2;
  return Integer(sign) * (2 * genus - 2);
}

std::string LoopLabel::name() const {
  if (base == Base::Beta) return "beta";
  return sign > 0 ? "omega" : "-omega";
}

LoopLabelledGraph::LoopLabelledGraph(std::vector<int> vertices) {
  for (int v : vertices) add_vertex(v);
}

void LoopLabelledGraph::add_vertex(int vertex) {
  if (vertex <= 0) throw InputError("vertices must be positive integers");
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), vertex);
  if (it != vertices_.end() && *it == vertex) return;
  vertices_.insert(it, vertex);
}

bool LoopLabelledGraph::has_vertex(int vertex) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), vertex);
}

void LoopLabelledGraph::add_loop(int vertex, LoopLabel label) {
  if (!has_vertex(vertex)) throw InputError("loop at unknown vertex " + std::to_string(vertex));
  if (label.base == LoopLabel::Base::Beta && label.sign != 1) {
    throw InputError("beta loops carry no sign");
  }
  loops_.push_back({vertex, label});
}

void LoopLabelledGraph::add_edge(int u, int v) {
  if (u == v) throw InputError("non-loop edge needs distinct endpoints");
  if (!has_vertex(u) || !has_vertex(v)) throw InputError("edge between unknown vertices");
  edges_.push_back({std::min(u, v), std::max(u, v)});
}

int LoopLabelledGraph::loop_count(int vertex) const {
  return static_cast<int>(
      std::count_if(loops_.begin(), loops_.end(), [&](const Loop& l) { return l.vertex == vertex; }));
}

int LoopLabelledGraph::degree(int vertex) const {
  int deg = 2 * loop_count(vertex);
  for (const Edge& e : edges_) deg += (e.u == vertex) + (e.v == vertex);
  return deg;
}

long LoopLabelledGraph::euler_characteristic() const {
  return static_cast<long>(vertices_.size()) - static_cast<long>(loops_.size()) -
         static_cast<long>(edges_.size());
}

namespace {

// Union-find over positions in the sorted vertex list.
std::vector<std::size_t> component_roots(const std::vector<int>& vertices,
                                         const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                    vertices.begin());
  };
  for (const Edge& e : edges) {
    const std::size_t a = find(index(e.u));
    const std::size_t b = find(index(e.v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = find(i);
  return parent;
}

}  // namespace

std::vector<std::vector<int>> LoopLabelledGraph::components() const {
  const auto roots = component_roots(vertices_, edges_);
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> root_order;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    auto it = std::find(root_order.begin(), root_order.end(), roots[i]);
    if (it == root_order.end()) {
      root_order.push_back(roots[i]);
      out.push_back({vertices_[i]});
    } else {
      out[static_cast<std::size_t>(it - root_order.begin())].push_back(vertices_[i]);
    }
  }
  return out;
}

LoopLabelledGraph LoopLabelledGraph::induced(const std::vector<int>& vertex_subset) const {
  LoopLabelledGraph out(vertex_subset);
  for (const Loop& l : loops_) {
    if (out.has_vertex(l.vertex)) out.loops_.push_back(l);
  }
  for (const Edge& e : edges_) {
    if (out.has_vertex(e.u) && out.has_vertex(e.v)) out.edges_.push_back(e);
  }
  return out;
}

LoopLabelledGraph LoopLabelledGraph::disjoint_union(const LoopLabelledGraph& a,
                                                    const LoopLabelledGraph& b) {
  LoopLabelledGraph out = a;
  for (int v : b.vertices_) {
    if (a.has_vertex(v)) throw InputError("disjoint_union: shared vertex " + std::to_string(v));
    out.add_vertex(v);
  }
  out.loops_.insert(out.loops_.end(), b.loops_.begin(), b.loops_.end());
  out.edges_.insert(out.edges_.end(), b.edges_.begin(), b.edges_.end());
  return out;
}

bool LoopLabelledGraph::same_as(const LoopLabelledGraph& other) const {
  if (vertices_ != other.vertices_) return false;
  auto loop_key = [](const Loop& l) {
    return std::tuple(l.vertex, static_cast<int>(l.label.base), l.label.sign);
  };
  auto edge_key = [](const Edge& e) { return std::pair(e.u, e.v); };
  std::vector<std::tuple<int, int, int>> la, lb;
  std::vector<std::pair<int, int>> ea, eb;
  for (const auto& l : loops_) la.push_back(loop_key(l));
  for (const auto& l : other.loops_) lb.push_back(loop_key(l));
  for (const auto& e : edges_) ea.push_back(edge_key(e));
  for (const auto& e : other.edges_) eb.push_back(edge_key(e));
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return la == lb && ea == eb;
}

std::string LoopLabelledGraph::to_string() const {
  std::string s = "V{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    s += (i ? "," : "") + std::to_string(vertices_[i]);
  }
  s += "} L{";
  for (std::size_t i = 0; i < loops_.size(); ++i) {
    s += (i ? "," : "") + loops_[i].label.name() + "@" + std::to_string(loops_[i].vertex);
  }
  s += "} E{";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    s += (i ? "," : "") + std::to_string(edges_[i].u) + "-" + std::to_string(edges_[i].v);
  }
  return s + "}";
}

void LoopLabelledGraph::remove_vertex(int vertex) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), vertex);
  if (it != vertices_.end() && *it == vertex) vertices_.erase(it);
}

void LoopLabelledGraph::remove_edge_at(std::size_t index) {
  edges_[index] = edges_.back();
  edges_.pop_back();
}

std::optional<Contraction> contraction_at(const LoopLabelledGraph& graph, int vertex) {
  for (const Loop& l : graph.loops()) {
    if (l.vertex == vertex) return std::nullopt;
  }
  int incident = 0;
  int ends[2] = {0, 0};
  for (const Edge& e : graph.edges()) {
    if (e.u != vertex && e.v != vertex) continue;
    if (incident == 2) return std::nullopt;
    ends[incident++] = e.u == vertex ? e.v : e.u;
  }
  if (incident == 1) return Contraction{Contraction::Rule::DeleteLeaf, vertex};
  if (incident == 2) {
    return Contraction{ends[0] != ends[1] ? Contraction::Rule::SmoothPath
                                          : Contraction::Rule::ParallelToLoop,
                       vertex};
  }
  return std::nullopt;
}

std::vector<Contraction> applicable_contractions(const LoopLabelledGraph& graph) {
  std::vector<Contraction> out;
  for (int v : graph.vertices()) {
    if (auto step = contraction_at(graph, v)) out.push_back(*step);
  }
  return out;
}

void apply_contraction(LoopLabelledGraph& graph, const Contraction& step) {
  const int j = step.vertex;
  int others[2] = {0, 0};
  int found = 0;
  const auto& edges = graph.edges();
  for (std::size_t idx = edges.size(); idx-- > 0;) {
    const Edge e = edges[idx];
    if (e.u != j && e.v != j) continue;
    if (found == 2) throw InternalError("contraction pivot has degree above 2");
    others[found++] = e.u == j ? e.v : e.u;
    graph.remove_edge_at(idx);
  }
  switch (step.rule) {
    case Contraction::Rule::DeleteLeaf:
      if (found != 1) throw InternalError("DeleteLeaf at vertex without degree 1");
      break;
    case Contraction::Rule::SmoothPath:
      if (found != 2 || others[0] == others[1]) throw InternalError("SmoothPath not applicable");
      graph.add_edge(others[0], others[1]);
      break;
    case Contraction::Rule::ParallelToLoop:
      if (found != 2 || others[0] != others[1]) {
        throw InternalError("ParallelToLoop not applicable");
      }
      graph.add_loop(others[0], LoopLabel::minus_omega());
      break;
  }
  graph.remove_vertex(j);
}

std::size_t reduce_in_place(LoopLabelledGraph& graph) {
  std::size_t steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    // Copy: the vertex list shrinks as we go.
    const std::vector<int> snapshot = graph.vertices();
    for (int v : snapshot) {
      if (!graph.has_vertex(v)) continue;
      if (auto step = contraction_at(graph, v)) {
        apply_contraction(graph, *step);
        ++steps;
        changed = true;
      }
    }
  }
  return steps;
}

LoopLabelledGraph reduce(const LoopLabelledGraph& graph) {
  LoopLabelledGraph out = graph;
  reduce_in_place(out);
  return out;
}

namespace {

struct ComponentShape {
  MinimalShape shape = MinimalShape::Other;
  LoopLabel first{};
  LoopLabel second{};
};

// `vertices`, `loops`, `edges` describe one minimal connected component.
ComponentShape shape_of(std::size_t vertex_count, const std::vector<const Loop*>& loops,
                        std::size_t edge_count) {
  ComponentShape out;
  if (vertex_count == 1 && loops.empty() && edge_count == 0) {
    out.shape = MinimalShape::Point;
  } else if (vertex_count == 1 && loops.size() == 1 && edge_count == 0) {
    out.shape = MinimalShape::SingleLoop;
    out.first = loops[0]->label;
  } else if (vertex_count == 1 && loops.size() == 2 && edge_count == 0) {
    out.shape = MinimalShape::FigureEight;
    out.first = loops[0]->label;
    out.second = loops[1]->label;
  } else if (vertex_count == 2 && loops.size() == 2 && edge_count == 1 &&
             loops[0]->vertex != loops[1]->vertex) {
    out.shape = MinimalShape::Dumbbell;
    out.first = loops[0]->label;
    out.second = loops[1]->label;
  } else if (vertex_count == 2 && loops.empty() && edge_count == 3) {
    out.shape = MinimalShape::Theta;
  }
  return out;
}

std::vector<ComponentShape> minimal_components(const LoopLabelledGraph& graph) {
  const auto& vertices = graph.vertices();
  const auto roots = component_roots(vertices, graph.edges());
  auto index = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                    vertices.begin());
  };
  std::vector<ComponentShape> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (roots[i] != i) continue;
    std::size_t vcount = 0;
    std::size_t ecount = 0;
    std::vector<const Loop*> loops;
    for (std::size_t k = 0; k < vertices.size(); ++k) vcount += roots[k] == i;
    for (const Loop& l : graph.loops()) {
      if (roots[index(l.vertex)] == i) loops.push_back(&l);
    }
    for (const Edge& e : graph.edges()) ecount += roots[index(e.u)] == i;
    out.push_back(shape_of(vcount, loops, ecount));
  }
  return out;
}

bool has_bare_vertex(const LoopLabelledGraph& graph) {
  for (int v : graph.vertices()) {
    if (graph.degree(v) == 0) return true;
  }
  return false;
}

detail::FactoredValue pairing(const LoopLabel& s, const LoopLabel& t) {
  using Basis = detail::FactoredValue::Basis;
  const bool s_beta = s.base == LoopLabel::Base::Beta;
  const bool t_beta = t.base == LoopLabel::Base::Beta;
  if (s_beta && t_beta) return {};
  return {s_beta || t_beta ? Basis::B : Basis::W, Integer(s.sign * t.sign)};
}

}  // namespace

MinimalShape classify_minimal(const LoopLabelledGraph& component) {
  std::vector<const Loop*> loops;
  for (const Loop& l : component.loops()) loops.push_back(&l);
  return shape_of(component.vertices().size(), loops, component.edges().size()).shape;
}

namespace detail {

FactoredValue evaluate_factored(LoopLabelledGraph& graph, int genus) {
  using Basis = FactoredValue::Basis;
  if (has_bare_vertex(graph)) return {};
  reduce_in_place(graph);

  const auto shapes = minimal_components(graph);
  for (const ComponentShape& c : shapes) {
    if (c.shape == MinimalShape::Point) return {};
  }
  FactoredValue out;
  Integer scalar = 1;
  bool seen_core = false;
  for (const ComponentShape& c : shapes) {
    switch (c.shape) {
      case MinimalShape::Point:
        break;
      case MinimalShape::SingleLoop:
        scalar *= c.first.degree(genus);
        break;
      case MinimalShape::Dumbbell:
      case MinimalShape::FigureEight:
      case MinimalShape::Theta: {
        if (seen_core) throw InternalError("two chi = -1 components in a chi = -1 graph");
        seen_core = true;
        if (c.shape == MinimalShape::Theta) {
          out = {Basis::T, 1};
        } else {
          out = pairing(c.first, c.second);
        }
        break;
      }
      case MinimalShape::Other:
        throw InternalError("unexpected minimal graph " + graph.to_string());
    }
  }
  if (!seen_core) throw InternalError("no chi = -1 component in " + graph.to_string());
  if (out.basis == Basis::Zero) return {};
  out.scalar *= scalar;
  if (out.scalar == 0) return {};
  return out;
}

Integer evaluate_geometric_in_place(LoopLabelledGraph& graph, int genus) {
  if (has_bare_vertex(graph)) return 0;
  reduce_in_place(graph);
  Integer value = 1;
  for (const ComponentShape& c : minimal_components(graph)) {
    if (c.shape != MinimalShape::SingleLoop) return 0;
    value *= c.first.degree(genus);
  }
  return value;
}

}  // namespace detail

IntersectionVector evaluate(const LoopLabelledGraph& graph, int genus) {
  if (graph.euler_characteristic() != -1) {
    throw InputError("arithmetic evaluation needs chi = -1, got " +
                     std::to_string(graph.euler_characteristic()));
  }
  LoopLabelledGraph work = graph;
  const auto v = detail::evaluate_factored(work, genus);
  IntersectionVector basis;
  switch (v.basis) {
    case detail::FactoredValue::Basis::Zero:
      return {};
    case detail::FactoredValue::Basis::W:
      basis = IntersectionVector::omega_omega();
      break;
    case detail::FactoredValue::Basis::B:
      basis = IntersectionVector::beta_omega();
      break;
    case detail::FactoredValue::Basis::T:
      basis = IntersectionVector::triple_diagonal();
      break;
  }
  return Rational(v.scalar) * basis;
}

Integer evaluate_geometric(const LoopLabelledGraph& graph, int genus) {
  if (graph.euler_characteristic() != 0) {
    throw InputError("geometric evaluation needs chi = 0, got " +
                     std::to_string(graph.euler_characteristic()));
  }
  LoopLabelledGraph work = graph;
  return detail::evaluate_geometric_in_place(work, genus);
}

}  // namespace tautheight::calculus
