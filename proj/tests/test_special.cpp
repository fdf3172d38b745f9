#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "hk/special.hpp"

TEST_CASE("erfc: reference values") {
  CHECK(hk::erfc(0.0) == 1.0);
  // erf(1) = 0.8427007929497149, erfc(1) = 0.15729920705028513.
  CHECK(hk::erfc(1.0) ==
        doctest::Approx(0.15729920705028513).epsilon(1e-14));
  CHECK(hk::erfc(-1.0) + hk::erfc(1.0) ==
        doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("erfcx: consistency with erfc at moderate arguments") {
  for (double x : {-3.0, -0.5, 0.0, 0.7, 2.0, 5.0, 15.0}) {
    const double lhs = hk::erfcx(x) * std::exp(-x * x);
    CHECK(lhs == doctest::Approx(hk::erfc(x)).epsilon(1e-13));
  }
}

TEST_CASE("erfcx: large-argument asymptotics") {
  // erfcx(x) ~ 1/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - ...).
  for (double x : {30.0, 100.0, 1e4, 1e8}) {
    const double lead = 1.0 / (x * std::sqrt(M_PI));
    const double ratio = hk::erfcx(x) / lead;
    const double expect = 1.0 - 0.5 / (x * x) + 0.75 / (x * x * x * x);
    // The next series term is -15/(2x^2)^3 ~ 2.6e-9 at x = 30.
    CHECK(ratio == doctest::Approx(expect).epsilon(1e-8));
  }
  // Strictly decreasing, positive.
  CHECK(hk::erfcx(10.0) > hk::erfcx(11.0));
  CHECK(hk::erfcx(1e6) > 0.0);
}
