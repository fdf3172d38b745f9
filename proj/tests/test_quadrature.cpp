#include <cmath>

#include "doctest.h"
#include "hk/errors.hpp"
#include "hk/quadrature.hpp"

TEST_CASE("integrate: smooth integrands to tight tolerance") {
  const auto q1 = hk::integrate([](double x) { return x * x; }, 0.0, 1.0,
                                1e-12, 0.0, 100);
  CHECK(q1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(q1.evaluations >= 15);
  const auto q2 = hk::integrate([](double x) { return std::exp(-x * x); },
                                -8.0, 8.0, 1e-12, 0.0, 1000);
  CHECK(q2.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
  CHECK(std::fabs(q2.value - std::sqrt(M_PI)) <=
        q2.error + 1e-15 * q2.value);
}

TEST_CASE("integrate: error estimate is honest on a kinked integrand") {
  const auto f = [](double x) { return std::sqrt(std::fabs(x - 0.3)); };
  const auto q = hk::integrate(f, 0.0, 1.0, 1e-10, 0.0, 10000);
  const double exact =
      (std::pow(0.3, 1.5) + std::pow(0.7, 1.5)) * 2.0 / 3.0;
  CHECK(std::fabs(q.value - exact) <= q.error + 1e-10 * exact);
}

TEST_CASE("integrate: budget exhaustion throws with an estimate") {
  // Highly oscillatory with 1 subdivision allowed: cannot converge.
  const auto f = [](double x) { return std::sin(500.0 * x * x); };
  try {
    hk::integrate(f, 0.0, 10.0, 1e-12, 0.0, 1);
    FAIL("expected QuadratureError");
  } catch (const hk::QuadratureError& e) {
    CHECK(e.error_estimate > 0.0);
  }
}

TEST_CASE("QuadratureConfig::validate") {
  hk::QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.rel_tol = 0.5;
  CHECK_THROWS_AS(cfg.validate(), hk::DomainError);
  cfg.rel_tol = 1e-8;
  cfg.max_subdivisions = 0;
  CHECK_THROWS_AS(cfg.validate(), hk::DomainError);
  cfg.max_subdivisions = 4000;
  cfg.abs_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), hk::DomainError);
  cfg.abs_tol = 0.0;
  cfg.tail_rel_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), hk::DomainError);
}
