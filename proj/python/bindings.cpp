#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tautheight/calculus/heights.hpp"
#include "tautheight/errors.hpp"
#include "tautheight/pmg/io.hpp"
#include "tautheight/verify/suites.hpp"

namespace py = pybind11;
using namespace tautheight;

namespace {

py::dict coefficients(const std::vector<long>& m, int g, unsigned threads) {
  calculus::ExpansionOptions options;
  options.threads = threads;
  const auto h = calculus::height_coefficients(m, g, options);
  py::dict out;
  out["a"] = format_fraction(h.a);
  out["b"] = format_fraction(h.b);
  out["c"] = format_fraction(h.c);
  out["G"] = h.geometric_degree.get_str();
  out["N"] = py::make_tuple(format_fraction(h.arithmetic_vector.w),
                            format_fraction(h.arithmetic_vector.p),
                            format_fraction(h.arithmetic_vector.b));
  out["identity"] = h.identity();
  return out;
}

std::string invariants_json(const std::string& text) {
  return pmg::report_to_json(pmg::invariants(pmg::parse_graph(text)));
}

std::string normalize_graph(const std::string& text) {
  return pmg::format_graph(pmg::parse_graph(text));
}

py::tuple run_suite(const std::string& name, const std::string& g_range) {
  const auto report = verify::run_suite(name, verify::parse_g_range(g_range));
  return py::make_tuple(report.ok(), report.to_json());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact height coefficients and pm-graph invariants";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<pmg::GraphParseError>(m, "GraphParseError", input_error.ptr());
  py::register_exception<pmg::GraphValidationError>(m, "GraphValidationError",
                                                     input_error.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def("height_coefficients", &coefficients, py::arg("m"), py::arg("g"),
        py::arg("threads") = 0u, "Coefficients as fraction strings.");
  m.def("invariants_json", &invariants_json, py::arg("graph_text"));
  m.def("format_graph", &normalize_graph, py::arg("graph_text"));
  m.def("run_suite", &run_suite, py::arg("name"), py::arg("g_range"));
  m.def("suite_names", &verify::suite_names);
  m.def("wilms_constant", [](int g) { return format_fraction(verify::wilms_constant(g).value); },
        py::arg("g"));
}
