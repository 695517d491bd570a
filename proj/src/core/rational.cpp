#include "tautheight/rational.hpp"

#include <cctype>

namespace tautheight {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw FractionParseError("malformed fraction '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw FractionParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational value(Integer(std::string(num), 10), d);
  value.canonicalize();
  if (text.front() == '-') value = -value;
  return value;
}

std::string format_fraction(const Rational& value) {
  Rational canon(value);
  canon.canonicalize();
  return canon.get_str();
}

Rational make_rational(long numerator, long denominator) {
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace tautheight
