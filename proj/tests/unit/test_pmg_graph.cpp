#include <doctest.h>

#include "tautheight/pmg/graph.hpp"

using namespace tautheight;
using namespace tautheight::pmg;

namespace {

GraphErrorKind kind_of(std::vector<Vertex> vs, std::vector<GraphEdge> es) {
  try {
    PolarizedMetrizedGraph g(std::move(vs), std::move(es));
  } catch (const GraphValidationError& e) {
    return e.kind();
  }
  FAIL("graph was accepted");
  return GraphErrorKind::Empty;
}

}  // namespace

TEST_CASE("validation failures are specific") {
  CHECK(kind_of({}, {}) == GraphErrorKind::Empty);
  CHECK(kind_of({{"a", 1}, {"a", 1}}, {{0, 1, 1}}) == GraphErrorKind::DuplicateVertex);
  CHECK(kind_of({{"a", -1}}, {{0, 0, 1}}) == GraphErrorKind::NegativeGenusMark);
  CHECK(kind_of({{"a", 0}}, {{0, 0, 0}}) == GraphErrorKind::NonpositiveLength);
  CHECK(kind_of({{"a", 0}}, {{0, 0, Rational(-1, 2)}}) == GraphErrorKind::NonpositiveLength);
  CHECK(kind_of({{"a", 1}, {"b", 1}}, {}) == GraphErrorKind::Disconnected);
  CHECK(kind_of({{"a", 0}, {"b", 1}}, {{0, 1, 1}}) == GraphErrorKind::NegativeCanonical);
  CHECK(kind_of({{"a", 0}}, {{0, 3, 1}}) == GraphErrorKind::UnknownVertex);
}

TEST_CASE("derived quantities") {
  const auto g = shapes::banana({1, 2, 3}, 0, 1);
  CHECK(g.valence(0) == 3);
  CHECK(g.canonical_divisor(0) == 1);
  CHECK(g.canonical_divisor(1) == 3);
  CHECK(g.betti_number() == 2);
  CHECK(g.genus() == 3);
  CHECK(g.total_length() == 6);
  const auto c = shapes::circle(5, 2);
  CHECK(c.valence(0) == 2);
  CHECK(c.canonical_divisor(0) == 4);
  CHECK(c.genus() == 3);
}

TEST_CASE("canonical divisor has degree 2g - 2") {
  const PolarizedMetrizedGraph g({{"a", 1}, {"b", 0}, {"c", 0}, {"d", 2}},
                                 {{1, 2, 2}, {1, 2, 1}, {2, 2, 1}, {0, 1, 1}, {2, 3, 3}});
  long sum = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) sum += g.canonical_divisor(v);
  CHECK(sum == 2 * g.genus() - 2);
}

TEST_CASE("bridges") {
  const PolarizedMetrizedGraph g({{"a", 1}, {"b", 0}, {"c", 0}},
                                 {{0, 1, 1}, {1, 2, 1}, {1, 2, 1}, {2, 2, 1}});
  CHECK(g.is_bridge(0));
  CHECK_FALSE(g.is_bridge(1));
  CHECK_FALSE(g.is_bridge(2));
  CHECK_FALSE(g.is_bridge(3));
}

TEST_CASE("subdividing a circle") {
  const auto c = shapes::circle(3);
  const auto s = c.subdivide(0, Rational(3, 2));
  CHECK(s.vertex_count() == 2);
  CHECK(s.edge_count() == 2);
  CHECK(s.edges()[0].length == Rational(3, 2));
  CHECK(s.edges()[1].length == Rational(3, 2));
  CHECK(s.genus() == 1);
  CHECK(s.canonical_divisor(1) == 0);
  CHECK_THROWS_AS(c.subdivide(0, 0), InputError);
  CHECK_THROWS_AS(c.subdivide(0, 3), InputError);
}

TEST_CASE("subdividing a bridge keeps the genus") {
  const auto b = shapes::segment(2, 1, 1);
  const auto s = b.subdivide(0, 1);
  CHECK(s.genus() == 2);
  CHECK(s.total_length() == 2);
}

TEST_CASE("vertex resistance") {
  const Rational L(7, 3);
  const auto c = shapes::circle(L).subdivide(0, L / 2);
  CHECK(vertex_resistance(c, 0, 1) == L / 4);
  CHECK(vertex_resistance(shapes::segment(L, 1, 1), 0, 1) == L);
  CHECK(vertex_resistance(shapes::banana({1, 1, 1}), 0, 1) == Rational(1, 3));
  CHECK(vertex_resistance(shapes::banana({1, 2, 3}), 1, 0) == Rational(6, 11));
  CHECK(vertex_resistance(c, 1, 1) == 0);
}

TEST_CASE("scaling multiplies lengths") {
  const auto g = shapes::banana({1, 2}).scaled(Rational(3, 2));
  CHECK(g.edges()[0].length == Rational(3, 2));
  CHECK(g.edges()[1].length == 3);
  CHECK_THROWS_AS(g.scaled(0), InputError);
}
