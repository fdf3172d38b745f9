#include <cmath>

#include "doctest.h"
#include "hk/errors.hpp"
#include "hk/hyperbolic.hpp"
#include "hk/lowdisc.hpp"
#include "oracles.hpp"

using hk::HalfPlanePoint;
using hk::hyperbolic_distance;

TEST_CASE("half-plane point invariants") {
  CHECK_THROWS_AS(HalfPlanePoint(0.0, 0.0), hk::DomainError);
  CHECK_THROWS_AS(HalfPlanePoint(1.0, -2.0), hk::DomainError);
  CHECK_THROWS_AS(HalfPlanePoint(NAN, 1.0), hk::DomainError);
  CHECK_NOTHROW(HalfPlanePoint(-3.0, 1e-12));
}

TEST_CASE("distance: exact values") {
  const HalfPlanePoint i(0, 1), i2(0, 2);
  CHECK(hyperbolic_distance(i, i) == 0.0);
  CHECK(hyperbolic_distance(i, i2) == doctest::Approx(M_LN2).epsilon(1e-15));
}

TEST_CASE("distance: geodesic polyline oracle") {
  const double d = hyperbolic_distance({1, 1}, {3, 1});
  const double ref = oracle::polyline_distance(1, 1, 3, 1);
  CHECK(std::fabs(d - ref) <= 1e-8 * ref);
  // And one off-axis pair through the circular-arc branch.
  const double d2 = hyperbolic_distance({-0.5, 0.3}, {2, 4});
  const double ref2 = oracle::polyline_distance(-0.5, 0.3, 2, 4);
  CHECK(std::fabs(d2 - ref2) <= 1e-8 * ref2);
  // Vertical-ray branch of the oracle.
  const double d3 = hyperbolic_distance({1, 0.5}, {1, 7});
  CHECK(std::fabs(d3 - std::log(14.0)) <= 1e-12);
  CHECK(std::fabs(oracle::polyline_distance(1, 0.5, 1, 7) - d3) <= 1e-8 * d3);
}

TEST_CASE("distance: symmetry, triangle inequality, invariance") {
  for (unsigned long long i = 1; i <= 200; ++i) {
    const double ax = -5.0 + 10.0 * hk::radical_inverse(i, 2);
    const double ay = 0.05 + 8.0 * hk::radical_inverse(i, 3);
    const double bx = -5.0 + 10.0 * hk::radical_inverse(i, 5);
    const double by = 0.05 + 8.0 * hk::radical_inverse(i, 7);
    const double cx = -5.0 + 10.0 * hk::radical_inverse(i, 11);
    const double cy = 0.05 + 8.0 * hk::radical_inverse(i, 13);
    const HalfPlanePoint a(ax, ay), b(bx, by), c(cx, cy);
    CHECK(hyperbolic_distance(a, b) == hyperbolic_distance(b, a));
    CHECK(hyperbolic_distance(a, c) <=
          hyperbolic_distance(a, b) + hyperbolic_distance(b, c) + 1e-12);
    const double d = hyperbolic_distance(a, b);
    const HalfPlanePoint at(ax + 2.5, ay), bt(bx + 2.5, by);
    CHECK(std::fabs(hyperbolic_distance(at, bt) - d) <=
          1e-12 * std::max(d, 1.0));
    const double lam = 3.7;
    const HalfPlanePoint as(lam * ax, lam * ay), bs(lam * bx, lam * by);
    CHECK(std::fabs(hyperbolic_distance(as, bs) - d) <=
          1e-12 * std::max(d, 1.0));
  }
}

TEST_CASE("radial_integral: Simpson oracle and analytic value") {
  hk::QuadratureConfig cfg;
  const auto f = [](double r) { return std::exp(-std::cosh(r)); };
  const double got = hk::radial_integral(f, 20.0, cfg);
  // 2 pi int e^{-cosh r} sinh r dr = 2 pi (e^{-1} - e^{-cosh 20}).
  CHECK(std::fabs(got - 2.0 * M_PI / M_E) <= 1e-8 * got);
  const auto g = [&f](double r) { return f(r) * std::sinh(r); };
  const double ref = 2.0 * M_PI * oracle::simpson(g, 0.0, 20.0, 20000);
  CHECK(std::fabs(got - ref) <= 1e-8 * got);
}

TEST_CASE("radial_integral: zero function and tail_cut stability") {
  hk::QuadratureConfig cfg;
  cfg.abs_tol = 1e-14;
  const auto zero = [](double) { return 0.0; };
  CHECK(hk::radial_integral(zero, 5.0, cfg) == 0.0);
  // Smooth bump supported in [1, 2]: doubling the cut beyond the support
  // moves the result by less than abs_tol.
  const auto bump = [](double r) {
    if (r <= 1.0 || r >= 2.0) return 0.0;
    const double s = (r - 1.0) * (2.0 - r);
    return std::exp(-1.0 / s);
  };
  const double a = hk::radial_integral(bump, 3.0, cfg);
  const double b = hk::radial_integral(bump, 6.0, cfg);
  CHECK(std::fabs(a - b) <= 1e-14);
  CHECK_THROWS_AS(hk::radial_integral(zero, -1.0, cfg), hk::DomainError);
}
