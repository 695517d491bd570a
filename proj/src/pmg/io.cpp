#include "tautheight/pmg/io.hpp"

#include <json.hpp>

namespace tautheight::pmg {

using nlohmann::json;

namespace {

const json& field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw GraphParseError(where + " must be an object");
  auto it = object.find(key);
  if (it == object.end()) throw GraphParseError(where + " is missing \"" + key + "\"");
  return *it;
}

std::string string_field(const json& object, const char* key, const std::string& where) {
  const json& value = field(object, key, where);
  if (!value.is_string()) throw GraphParseError(where + "." + key + " must be a string");
  return value.get<std::string>();
}

Rational length_field(const json& object, const std::string& where) {
  const json& value = field(object, "length", where);
  try {
    if (value.is_string()) return parse_fraction(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
  } catch (const FractionParseError& e) {
    throw GraphParseError(where + ".length: " + e.what());
  }
  throw GraphParseError(where + ".length must be a fraction string");
}

}  // namespace

PolarizedMetrizedGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphParseError(std::string("malformed document: ") + e.what());
  }
  const json& vertices = field(doc, "vertices", "document");
  const json& edges = field(doc, "edges", "document");
  if (!vertices.is_array()) throw GraphParseError("\"vertices\" must be a list");
  if (!edges.is_array()) throw GraphParseError("\"edges\" must be a list");

  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    Vertex v;
    v.id = string_field(vertices[i], "id", where);
    const json& q = field(vertices[i], "q", where);
    if (!q.is_number_integer()) throw GraphParseError(where + ".q must be an integer");
    v.genus_mark = q.get<int>();
    vs.push_back(std::move(v));
  }
  auto lookup = [&](const std::string& id) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].id == id) return i;
    }
    throw GraphValidationError(GraphErrorKind::UnknownVertex, "'" + id + "'");
  };
  std::vector<GraphEdge> es;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const std::string u = string_field(edges[i], "u", where);
    const std::string v = string_field(edges[i], "v", where);
    const Rational length = length_field(edges[i], where);
    es.push_back({lookup(u), lookup(v), length});
  }
  return PolarizedMetrizedGraph(std::move(vs), std::move(es));
}

std::string format_graph(const PolarizedMetrizedGraph& graph) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : graph.vertices()) {
    doc["vertices"].push_back({{"id", v.id}, {"q", v.genus_mark}});
  }
  doc["edges"] = json::array();
  for (const auto& e : graph.edges()) {
    doc["edges"].push_back({{"u", graph.vertices()[e.u].id},
                            {"v", graph.vertices()[e.v].id},
                            {"length", format_fraction(e.length)}});
  }
  return doc.dump(2);
}

std::string report_to_json(const InvariantReport& report) {
  json doc;
  doc["delta"] = format_fraction(report.delta);
  doc["tau"] = format_fraction(report.tau);
  doc["epsilon"] = report.epsilon ? json(format_fraction(*report.epsilon)) : json(nullptr);
  doc["phi"] = report.phi ? json(format_fraction(*report.phi)) : json(nullptr);
  doc["alpha"] = format_fraction(report.alpha);
  json types = json::object();
  for (const auto& [i, length] : report.delta_i) types[std::to_string(i)] = format_fraction(length);
  doc["delta_i"] = types;
  return doc.dump(2);
}

std::string report_to_text(const InvariantReport& report) {
  auto opt = [](const std::optional<Rational>& v) {
    return v ? format_fraction(*v) : std::string("undefined");
  };
  std::string out;
  out += "delta = " + format_fraction(report.delta) + "\n";
  out += "tau = " + format_fraction(report.tau) + "\n";
  out += "epsilon = " + opt(report.epsilon) + "\n";
  out += "phi = " + opt(report.phi) + "\n";
  out += "alpha = " + format_fraction(report.alpha) + "\n";
  for (const auto& [i, length] : report.delta_i) {
    out += "delta_" + std::to_string(i) + " = " + format_fraction(length) + "\n";
  }
  return out;
}

}  // namespace tautheight::pmg
