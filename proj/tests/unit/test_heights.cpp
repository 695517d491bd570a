#include <doctest.h>

#include <algorithm>

#include "tautheight/calculus/heights.hpp"
#include "tautheight/errors.hpp"

using namespace tautheight;
using namespace tautheight::calculus;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

void check_abc(const HeightCoefficients& h, const Rational& a, const Rational& b,
               const Rational& c) {
  CHECK(h.a == a);
  CHECK(h.b == b);
  CHECK(h.c == c);
}

}  // namespace

TEST_CASE("curve coefficients") {
  for (int g = 2; g <= 10; ++g) {
    CAPTURE(g);
    check_abc(height_coefficients({1}, g), q(1, 8 * (g - 1)), 0, q(g - 1, g));
  }
}

TEST_CASE("difference surface and square at g = 3") {
  check_abc(height_coefficients({1, -1}, 3), q(1, 9), q(-1, 36), 0);
  check_abc(height_coefficients({1, 1}, 3), q(1, 72), q(1, 36), q(4, 3));
}

TEST_CASE("theta divisor in genus 4") {
  const auto h = height_coefficients({1, 1, 1}, 4);
  CHECK(h.a == q(1, 96));
  CHECK(h.b == q(1, 48));
  CHECK(h.c == q(9, 4));  // oracle value; no closed form to compare with
}

TEST_CASE("empty multi-index") {
  const auto h = height_coefficients({}, 4);
  check_abc(h, 0, 0, 0);
  CHECK(h.geometric_degree == 1);
}

TEST_CASE("oracle coefficients") {
  check_abc(height_coefficients({2, 3}, 4), q(17, 72), q(1, 12), q(25, 2));
  check_abc(height_coefficients({1, 2}, 3), q(17, 288), q(1, 18), 3);
  check_abc(height_coefficients({3, -1}, 2), q(5, 8), q(-1, 4), 0);
  check_abc(height_coefficients({2, -1, -1}, 4), q(11, 96), q(-1, 48), 0);
  check_abc(height_coefficients({1, 1, 1}, 3), 0, 0, 0);
}

TEST_CASE("symmetry under permutation and sign") {
  const std::vector<long> m{2, -1, 3};
  const auto ref = height_coefficients(m, 4);
  auto perm = m;
  std::sort(perm.begin(), perm.end());
  do {
    const auto h = height_coefficients(perm, 4);
    CHECK(h.a == ref.a);
    CHECK(h.b == ref.b);
    CHECK(h.c == ref.c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const auto neg = height_coefficients({-2, 1, -3}, 4);
  check_abc(neg, ref.a, ref.b, ref.c);
}

TEST_CASE("quadratic scaling") {
  for (int g = 2; g <= 5; ++g) {
    const auto base = height_coefficients({1}, g);
    const auto twice = height_coefficients({2}, g);
    CHECK(twice.a == q(1, 2 * g - 2));
    check_abc(twice, 4 * base.a, 4 * base.b, 4 * base.c);
  }
  const auto base = height_coefficients({1, 2}, 4);
  check_abc(height_coefficients({3, 6}, 4), 9 * base.a, 9 * base.b, 9 * base.c);
}

TEST_CASE("d = 0 gives c = 0") {
  CHECK(height_coefficients({1, -1}, 5).c == 0);
  CHECK(height_coefficients({2, -1, -1}, 5).c == 0);
  CHECK(height_coefficients({3, -2, -1}, 4).c == 0);
}

TEST_CASE("identity rendering") {
  const auto text = height_coefficients({1, -1}, 3).identity();
  CHECK(text.find("1/9 <w,w>") != std::string::npos);
  CHECK(text.find("-1/36") != std::string::npos);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(height_coefficients({1}, 1), InputError);
  CHECK_THROWS_AS(height_coefficients({0}, 3), InputError);
}
