#include <doctest.h>

#include <json.hpp>

#include "tautheight/pmg/io.hpp"

using namespace tautheight;
using namespace tautheight::pmg;

namespace {

GraphErrorKind validation_kind(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const GraphValidationError& e) {
    return e.kind();
  }
  FAIL("no validation error for " << text);
  return GraphErrorKind::Empty;
}

}  // namespace

TEST_CASE("parse a circle") {
  const auto g = parse_graph(
      R"({"vertices":[{"id":"a","q":0}],"edges":[{"u":"a","v":"a","length":"3/2"}]})");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 1);
  CHECK(g.edges()[0].is_loop());
  CHECK(g.edges()[0].length == make_rational(3, 2));
  CHECK(g.genus() == 1);
}

TEST_CASE("integer lengths and unreduced fractions") {
  const auto g = parse_graph(
      R"({"vertices":[{"id":"a","q":1},{"id":"b","q":1}],"edges":[{"u":"a","v":"b","length":"4/6"},{"u":"b","v":"a","length":2}]})");
  CHECK(g.edges()[0].length == make_rational(2, 3));
  CHECK(g.edges()[1].length == 2);
  CHECK(g.genus() == 3);
}

TEST_CASE("validation errors") {
  CHECK(validation_kind(
            R"({"vertices":[{"id":"a","q":0}],"edges":[{"u":"a","v":"a","length":"0/1"}]})") ==
        GraphErrorKind::NonpositiveLength);
  CHECK(validation_kind(
            R"({"vertices":[{"id":"a","q":0}],"edges":[{"u":"a","v":"a","length":"-2"}]})") ==
        GraphErrorKind::NonpositiveLength);
  CHECK(validation_kind(R"({"vertices":[{"id":"a","q":1},{"id":"b","q":1}],"edges":[]})") ==
        GraphErrorKind::Disconnected);
  CHECK(validation_kind(
            R"({"vertices":[{"id":"a","q":1},{"id":"a","q":1}],"edges":[{"u":"a","v":"a","length":"1"}]})") ==
        GraphErrorKind::DuplicateVertex);
  CHECK(validation_kind(
            R"({"vertices":[{"id":"a","q":0},{"id":"b","q":1}],"edges":[{"u":"a","v":"b","length":"1"}]})") ==
        GraphErrorKind::NegativeCanonical);
  CHECK(validation_kind(
            R"({"vertices":[{"id":"a","q":1}],"edges":[{"u":"a","v":"z","length":"1"}]})") ==
        GraphErrorKind::UnknownVertex);
  CHECK(validation_kind(R"({"vertices":[{"id":"a","q":-1}],"edges":[]})") ==
        GraphErrorKind::NegativeGenusMark);
  CHECK(validation_kind(R"({"vertices":[],"edges":[]})") == GraphErrorKind::Empty);
}

TEST_CASE("validation messages name the problem") {
  try {
    parse_graph(R"({"vertices":[{"id":"a","q":1},{"id":"b","q":1}],"edges":[]})");
    FAIL("accepted");
  } catch (const GraphValidationError& e) {
    CHECK(std::string(e.what()).find("disconnected") != std::string::npos);
  }
}

TEST_CASE("parse errors are distinct from validation errors") {
  const std::vector<std::string> bad{
      "not json",
      R"({"edges":[]})",
      R"({"vertices":{},"edges":[]})",
      R"({"vertices":[{"id":"a"}],"edges":[]})",
      R"({"vertices":[{"id":"a","q":"1"}],"edges":[]})",
      R"({"vertices":[{"id":"a","q":0}],"edges":[{"u":"a","v":"a","length":"1/0"}]})",
      R"({"vertices":[{"id":"a","q":0}],"edges":[{"u":"a","v":"a","length":"x"}]})",
      R"({"vertices":[{"id":"a","q":0}],"edges":[{"u":"a","v":"a","length":1.5}]})",
      R"({"vertices":[{"id":"a","q":0}],"edges":[{"u":"a","length":"1"}]})",
  };
  for (const auto& text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_graph(text), GraphParseError);
  }
}

TEST_CASE("round trip") {
  const PolarizedMetrizedGraph g({{"p", 1}, {"s", 0}, {"t", 0}, {"u", 2}},
                                 {{1, 2, 2},
                                  {1, 2, make_rational(1, 3)},
                                  {2, 2, make_rational(5, 4)},
                                  {0, 1, make_rational(1, 2)},
                                  {2, 3, 3}});
  const std::string text = format_graph(g);
  const auto back = parse_graph(text);
  CHECK(format_graph(back) == text);
  CHECK(report_to_json(invariants(back)) == report_to_json(invariants(g)));
}

TEST_CASE("report serialization") {
  const auto r = invariants(shapes::circle(1));
  const auto doc = nlohmann::json::parse(report_to_json(r));
  CHECK(doc["tau"] == "1/12");
  CHECK(doc["phi"] == "0");
  CHECK(doc["alpha"] == "1/12");
  CHECK(doc["delta_i"]["0"] == "1");
  const auto text = report_to_text(r);
  CHECK(text.find("tau = 1/12\n") != std::string::npos);
}
