#include "tautheight/verify/report.hpp"

#include <algorithm>
#include <json.hpp>

namespace tautheight::verify {

std::string SymbolicHeightVector::to_string() const {
  return "(" + format_fraction(w) + ", " + format_fraction(p) + ", " + format_fraction(h) + ")";
}

void VerificationReport::compare(const std::string& name, const Rational& expected,
                                 const Rational& computed, std::string note) {
  add({name, format_fraction(expected), format_fraction(computed),
       expected == computed ? CheckStatus::Pass : CheckStatus::Fail, std::move(note)});
}

void VerificationReport::compare(const std::string& name, const SymbolicHeightVector& expected,
                                 const SymbolicHeightVector& computed, std::string note) {
  add({name, expected.to_string(), computed.to_string(),
       expected == computed ? CheckStatus::Pass : CheckStatus::Fail, std::move(note)});
}

void VerificationReport::skip(const std::string& name, std::string reason) {
  add({name, "-", "-", CheckStatus::Skipped, std::move(reason)});
}

void VerificationReport::append(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

namespace {

std::size_t count(const std::vector<CheckEntry>& entries, CheckStatus status) {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.status == status; }));
}

const char* label(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "SKIP";
  }
  return "?";
}

}  // namespace

std::size_t VerificationReport::passed() const { return count(entries_, CheckStatus::Pass); }
std::size_t VerificationReport::failed() const { return count(entries_, CheckStatus::Fail); }
std::size_t VerificationReport::skipped() const { return count(entries_, CheckStatus::Skipped); }

std::string VerificationReport::to_text() const {
  std::string out;
  for (const auto& e : entries_) {
    out += std::string(label(e.status)) + "  " + e.name;
    if (e.status == CheckStatus::Skipped) {
      out += "  skipped: " + e.note;
    } else {
      out += "  expected " + e.expected + "  computed " + e.computed;
      if (!e.note.empty()) out += "  [" + e.note + "]";
    }
    out += "\n";
  }
  out += std::to_string(passed()) + " passed, " + std::to_string(failed()) + " failed, " +
         std::to_string(skipped()) + " skipped\n";
  return out;
}

std::string VerificationReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json checks = ordered_json::object();
  for (const auto& e : entries_) {
    ordered_json item;
    item["expected"] = e.expected;
    item["computed"] = e.computed;
    item["pass"] = e.status == CheckStatus::Pass;
    item["status"] = e.status == CheckStatus::Pass   ? "pass"
                     : e.status == CheckStatus::Fail ? "fail"
                                                     : "skipped";
    if (!e.note.empty()) item["note"] = e.note;
    checks[e.name] = item;
  }
  ordered_json doc;
  doc["checks"] = checks;
  doc["summary"] = {{"passed", passed()}, {"failed", failed()}, {"skipped", skipped()}};
  return doc.dump(2);
}

}  // namespace tautheight::verify
