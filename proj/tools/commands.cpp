#include "commands.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tautheight/calculus/heights.hpp"
#include "tautheight/errors.hpp"
#include "tautheight/pmg/io.hpp"
#include "tautheight/verify/suites.hpp"

namespace tautheight::cli {

namespace {

std::vector<long> parse_multi_index(const std::string& text) {
  std::vector<long> m;
  if (text.empty()) return m;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    long value = 0;
    const auto* end = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(item.data(), end, value);
    if (item.empty() || ec != std::errc() || ptr != end) {
      throw InputError("malformed multi-index entry '" + std::string(item) + "'");
    }
    m.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string summary_text(const pmg::InvariantReport& r) {
  auto opt = [](const std::optional<Rational>& v) {
    return v ? format_fraction(*v) : std::string("undefined");
  };
  std::string out = "tau = " + format_fraction(r.tau) + ", phi = " + opt(r.phi) +
                    ", alpha = " + format_fraction(r.alpha) + "\n";
  out += "delta = " + format_fraction(r.delta) + ", epsilon = " + opt(r.epsilon) + "\n";
  std::string types;
  for (const auto& [i, length] : r.delta_i) {
    if (!types.empty()) types += ", ";
    types += "delta_" + std::to_string(i) + " = " + format_fraction(length);
  }
  return out + types + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact height coefficients and metrized graph invariants", "tautheight"};
  app.require_subcommand(1);

  int g = 0;
  std::string m_text;
  unsigned threads = 0;
  bool json = false;
  auto* coeffs = app.add_subcommand("coeffs", "Height coefficients (a, b, c) of Z_{m,alpha}");
  coeffs->add_option("--g", g, "Genus (>= 2)")->required();
  coeffs->add_option("--m", m_text, "Comma-separated nonzero integers; empty for m = ()")
      ->required()
      ->allow_extra_args(false);
  coeffs->add_option("--threads", threads, "Expansion worker threads (0 = all cores)");

  std::string graph_path;
  auto* inv = app.add_subcommand("invariants", "Invariants of a polarized metrized graph");
  inv->add_option("graph", graph_path, "Graph file")->required();
  inv->add_flag("--json", json, "Machine-readable output");

  auto* fmt = app.add_subcommand("format", "Parse a graph file and print it normalized");
  fmt->add_option("graph", graph_path, "Graph file")->required();

  std::string suite = "paper";
  std::string g_range = "2..5";
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "closed-form, wilms, gross-schoen, bounds or paper")
      ->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--g", g_range, "Genus range, e.g. 2..4");
  ver->add_flag("--json", json, "Machine-readable output");

  auto* rep = app.add_subcommand("report", "Derived bounds for one genus");
  rep->add_option("--g", g, "Genus (>= 2)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*coeffs) {
      const auto m = parse_multi_index(m_text);
      calculus::ExpansionOptions options;
      options.threads = threads;
      const auto c = calculus::height_coefficients(m, g, options);
      out << "a = " << format_fraction(c.a) << ", b = " << format_fraction(c.b)
          << ", c = " << format_fraction(c.c) << "\n";
      out << "G = " << c.geometric_degree.get_str() << "\n";
      out << "N = " << c.arithmetic_vector.to_string() << "  (basis W, Phi, B)\n";
      out << c.identity() << "\n";
      if (g == 2) out << "note: genus 2 is hyperelliptic; 5W = 2Phi, so (a, b) is one representative\n";
      return kSuccess;
    }
    if (*inv) {
      const auto graph = pmg::parse_graph(read_file(graph_path));
      const auto report = pmg::invariants(graph);
      out << (json ? pmg::report_to_json(report) + "\n" : summary_text(report));
      return kSuccess;
    }
    if (*fmt) {
      out << pmg::format_graph(pmg::parse_graph(read_file(graph_path))) << "\n";
      return kSuccess;
    }
    if (*ver) {
      const auto report = verify::run_suite(suite, verify::parse_g_range(g_range));
      out << (json ? report.to_json() + "\n" : report.to_text());
      return report.ok() ? kSuccess : kVerificationFailure;
    }
    if (*rep) {
      const auto d = verify::derived_bound_values(g);
      out << "bogomolov coefficient -b/a for m=(1,-1): " << format_fraction(d.bogomolov) << "\n";
      out << "h'(Z_2) <= " << format_fraction(d.z2_bound.w) << " W/[k:Q] + "
          << format_fraction(d.z2_bound.h) << " h'(x_alpha)\n";
      out << "factor vs h'(Z_1): W " << format_fraction(d.w_factor) << ", h'(x_alpha) "
          << format_fraction(d.h_factor) << "\n";
      const auto report = verify::derived_bounds(g);
      out << report.to_text();
      return report.ok() ? kSuccess : kVerificationFailure;
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const pmg::GraphParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const pmg::GraphValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

}  // namespace tautheight::cli
