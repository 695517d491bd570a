#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"

using tautheight::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TAUTHEIGHT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("coeffs") {
  const auto r = invoke({"coeffs", "--g", "3", "--m", "1,-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("a = 1/9, b = -1/36, c = 0") != std::string::npos);
  CHECK(r.err.empty());
  const auto empty = invoke({"coeffs", "--g", "4", "--m", ""});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("a = 0, b = 0, c = 0") != std::string::npos);
  const auto two = invoke({"coeffs", "--g", "2", "--m", "1"});
  CHECK(two.code == 0);
  CHECK(two.out.find("a = 1/8, b = 0, c = 1/2") != std::string::npos);
}

TEST_CASE("coeffs output is stable across thread counts") {
  const auto one = invoke({"coeffs", "--g", "5", "--m", "1,1,-1", "--threads", "1"});
  const auto four = invoke({"coeffs", "--g", "5", "--m", "1,1,-1", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("input errors exit 2") {
  CHECK(invoke({"coeffs", "--g", "1", "--m", "1"}).code == 2);
  CHECK(invoke({"coeffs", "--g", "3", "--m", "1,0"}).code == 2);
  CHECK(invoke({"coeffs", "--g", "3", "--m", "1,x"}).code == 2);
  CHECK(invoke({"verify", "--suite", "nope"}).code == 2);
  CHECK(invoke({"verify", "--g", "1..3"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  const auto missing = invoke({"invariants", data("no-such.graph")});
  CHECK(missing.code == 2);
  CHECK_FALSE(missing.err.empty());
  CHECK(missing.out.empty());
}

TEST_CASE("capacity errors exit 3") {
  const auto r = invoke({"coeffs", "--g", "9", "--m", "1,1,1,1,1,1,1,1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("capacity error") != std::string::npos);
  CHECK(invoke({"coeffs", "--g", "9", "--m", "1,1"}).code == 0);
}

TEST_CASE("invariants") {
  const auto r = invoke({"invariants", data("circle.graph")});
  CHECK(r.code == 0);
  CHECK(r.out.find("tau = 1/12, phi = 0, alpha = 1/12") != std::string::npos);
  const auto j = invoke({"invariants", data("dual_graph.graph"), "--json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["tau"] == "169/144");
  CHECK(doc["epsilon"] == "8909/630");
  CHECK(doc["delta_i"]["2"] == "3");
}

TEST_CASE("bad graph files exit 2 with distinct prefixes") {
  const std::string dir = std::string(TAUTHEIGHT_BINARY_DIR);
  const std::string malformed = dir + "/malformed.graph";
  const std::string invalid = dir + "/invalid.graph";
  std::ofstream(malformed) << R"({"vertices":[{"id":"a","q":0}],"edges":[{"u":"a","v":"a","length":"1/0"}]})";
  std::ofstream(invalid) << R"({"vertices":[{"id":"a","q":1},{"id":"b","q":1}],"edges":[]})";
  const auto p = invoke({"invariants", malformed});
  CHECK(p.code == 2);
  CHECK(p.err.rfind("parse error:", 0) == 0);
  const auto v = invoke({"invariants", invalid});
  CHECK(v.code == 2);
  CHECK(v.err.rfind("validation error:", 0) == 0);
  CHECK(v.err.find("disconnected") != std::string::npos);
}

TEST_CASE("format round trip") {
  for (const char* name : {"circle.graph", "bridge.graph", "circle_q1.graph", "theta.graph",
                           "dual_graph.graph"}) {
    CAPTURE(name);
    const auto first = invoke({"format", data(name)});
    REQUIRE(first.code == 0);
    const std::string path = std::string(TAUTHEIGHT_BINARY_DIR) + "/roundtrip.graph";
    std::ofstream(path) << first.out;
    const auto second = invoke({"format", path});
    CHECK(second.out == first.out);
    CHECK(invoke({"invariants", path, "--json"}).out ==
          invoke({"invariants", data(name), "--json"}).out);
  }
}

TEST_CASE("verify and report") {
  const auto r = invoke({"verify", "--suite", "paper", "--g", "2..4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("skipped: hyperelliptic non-uniqueness") != std::string::npos);
  const auto j = invoke({"verify", "--suite", "closed-form", "--g", "3", "--json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["summary"]["failed"] == 0);
  const auto rep = invoke({"report", "--g", "5"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("3") != std::string::npos);
}
