#include <cmath>

#include "doctest.h"
#include "hk/errors.hpp"
#include "hk/kernel.hpp"
#include "oracles.hpp"

using hk::eval_kernel;
using hk::KernelQuery;
using hk::Weight;

namespace {
const hk::QuadratureConfig kCfg;  // defaults: rel 1e-8, tail 1e-10

double K(double t, double r, double k) {
  return eval_kernel(KernelQuery(t, r, Weight(k)), kCfg).value;
}
}  // namespace

TEST_CASE("frozen reference values (independent adaptive quadrature)") {
  // Produced once with an unrelated adaptive integrator at 1e-11 rel tol.
  CHECK(K(1.0, 1.0, 0.0) == doctest::Approx(4.149118395782e-02).epsilon(2e-8));
  CHECK(K(1.0, 1.0, 0.5) == doctest::Approx(5.082064271136e-02).epsilon(2e-8));
  CHECK(K(0.1, 1.0, 1.0) == doctest::Approx(6.387582447236e-02).epsilon(2e-8));
  CHECK(K(10.0, 5.0, 2.7) ==
        doctest::Approx(1.679566613913e+15).epsilon(2e-8));
  CHECK(K(1.0, 0.0, 0.3) == doctest::Approx(6.220162672094e-02).epsilon(2e-8));
  CHECK(K(1.0, 2.0, 1.3) == doctest::Approx(5.152589232954e-02).epsilon(2e-8));
}

TEST_CASE("engine vs naive endpoint-split oracle") {
  for (double t : {0.1, 1.0, 10.0})
    for (double r : {0.1, 1.0, 5.0})
      for (double k : {0.0, 1.0, 2.7}) {
        const double a = K(t, r, k);
        const double b = oracle::naive_kernel(t, r, k);
        CHECK(std::fabs(a - b) <= 1e-6 * std::fabs(b));
      }
}

TEST_CASE("report self-consistency") {
  const auto rep = eval_kernel(KernelQuery(2.0, 1.5, Weight(0.9)), kCfg);
  CHECK(rep.value > 0.0);
  CHECK(rep.error_estimate >= 0.0);
  CHECK(rep.tail_bound >= 0.0);
  CHECK(rep.tail_cut > 1.5);
  CHECK(rep.evaluations > 0);
  CHECK(!rep.underflow);
  CHECK(rep.error_estimate + rep.tail_bound <= 1e-7 * rep.value);
}

TEST_CASE("tolerance honesty: tighter tolerance stays within the budget") {
  hk::QuadratureConfig tight = kCfg;
  tight.rel_tol = 1e-10;
  for (double t : {0.3, 2.0})
    for (double r : {0.2, 3.0}) {
      const auto a = eval_kernel(KernelQuery(t, r, Weight(1.2)), kCfg);
      const auto b = eval_kernel(KernelQuery(t, r, Weight(1.2)), tight);
      CHECK(std::fabs(a.value - b.value) <=
            a.error_estimate + a.tail_bound + 1e-12 * a.value);
    }
}

TEST_CASE("weight symmetry and positivity") {
  for (double t : {0.1, 1.0, 10.0})
    for (double r : {0.0, 1.0, 4.0}) {
      const double a = K(t, r, 1.7);
      const double b = K(t, r, -1.7);
      CHECK(a > 0.0);
      CHECK(std::fabs(a - b) <= 1e-12 * a);
    }
}

TEST_CASE("underflow far from the diagonal is reported, not thrown") {
  const auto rep = eval_kernel(KernelQuery(0.01, 60.0, Weight(0.0)), kCfg);
  CHECK(rep.underflow);
  CHECK(rep.value == 0.0);
  CHECK(rep.error_estimate > 0.0);
}

TEST_CASE("query and tail-bound preconditions") {
  CHECK_THROWS_AS(KernelQuery(0.0, 1.0, Weight(0.0)), hk::DomainError);
  CHECK_THROWS_AS(KernelQuery(-1.0, 1.0, Weight(0.0)), hk::DomainError);
  CHECK_THROWS_AS(KernelQuery(1.0, -0.1, Weight(0.0)), hk::DomainError);
  CHECK_THROWS_AS(hk::tail_bound(1.0, 1.0, Weight(0.0), 1.5),
                  hk::DomainError);
  CHECK_THROWS_AS(hk::tail_bound(1.0, -1.0, Weight(0.0), 5.0),
                  hk::DomainError);
}

TEST_CASE("points entry agrees with the radial entry") {
  const hk::HalfPlanePoint z(0, 1), w(0, 2);
  const auto a = hk::eval_kernel_points(1.0, z, w, Weight(0.5), kCfg);
  const auto b = eval_kernel(KernelQuery(1.0, M_LN2, Weight(0.5)), kCfg);
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-13));
}

TEST_CASE("overflow for extreme weight carries a log-scale value") {
  try {
    K(1.0, 1.0, 200.0);
    FAIL("expected OverflowError");
  } catch (const hk::OverflowError& e) {
    CHECK(e.log_value > 350.0);
  }
}
