#ifndef TAUTHEIGHT_VERIFY_REPORT_HPP
#define TAUTHEIGHT_VERIFY_REPORT_HPP

#include <string>
#include <vector>

#include "tautheight/calculus/heights.hpp"

namespace tautheight::verify {

/// a W + b Phi + c H with W = <w,w>, Phi = sum_v phi(X_v) log Nv and
/// H = [k:Q] h'(x_alpha); this is [k:Q] times a height.
struct SymbolicHeightVector {
  Rational w;
  Rational p;
  Rational h;

  static SymbolicHeightVector from(const calculus::HeightCoefficients& c) { return {c.a, c.b, c.c}; }

  friend SymbolicHeightVector operator+(const SymbolicHeightVector& x,
                                        const SymbolicHeightVector& y) {
    return {x.w + y.w, x.p + y.p, x.h + y.h};
  }
  friend SymbolicHeightVector operator-(const SymbolicHeightVector& x,
                                        const SymbolicHeightVector& y) {
    return {x.w - y.w, x.p - y.p, x.h - y.h};
  }
  friend SymbolicHeightVector operator*(const Rational& s, const SymbolicHeightVector& x) {
    return {s * x.w, s * x.p, s * x.h};
  }
  friend bool operator==(const SymbolicHeightVector& x, const SymbolicHeightVector& y) {
    return x.w == y.w && x.p == y.p && x.h == y.h;
  }

  std::string to_string() const;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckEntry {
  std::string name;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Fail;
  std::string note;  // reason for a skip, or context for the comparison
};

class VerificationReport {
 public:
  void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }
  /// Records an exact comparison.
  void compare(const std::string& name, const Rational& expected, const Rational& computed,
               std::string note = {});
  void compare(const std::string& name, const SymbolicHeightVector& expected,
               const SymbolicHeightVector& computed, std::string note = {});
  void skip(const std::string& name, std::string reason);
  void append(const VerificationReport& other);

  const std::vector<CheckEntry>& entries() const { return entries_; }
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }

  /// One line per entry followed by a summary line.
  std::string to_text() const;
  /// {"checks": {name: {expected, computed, pass, status, note}}, "summary": {...}}.
  std::string to_json() const;

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace tautheight::verify

#endif  // TAUTHEIGHT_VERIFY_REPORT_HPP
