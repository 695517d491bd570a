#ifndef TAUTHEIGHT_PMG_IO_HPP
#define TAUTHEIGHT_PMG_IO_HPP

#include <string>
#include <string_view>

#include "tautheight/pmg/analysis.hpp"
#include "tautheight/pmg/graph.hpp"

namespace tautheight::pmg {

/// Malformed graph document: bad JSON, missing or mistyped fields, bad fractions.
/// Structurally well-formed documents describing an invalid graph raise
/// GraphValidationError instead.
class GraphParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Reads {"vertices": [{"id", "q"}], "edges": [{"u", "v", "length": "p/q"}]}.
PolarizedMetrizedGraph parse_graph(std::string_view text);

/// Inverse of parse_graph; lengths as lowest-terms fraction strings.
std::string format_graph(const PolarizedMetrizedGraph& graph);

/// JSON map of fraction strings; epsilon and phi are null when undefined.
std::string report_to_json(const InvariantReport& report);

/// One "name = value" line per field.
std::string report_to_text(const InvariantReport& report);

}  // namespace tautheight::pmg

#endif  // TAUTHEIGHT_PMG_IO_HPP
