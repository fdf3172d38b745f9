#include <cmath>
#include <cstring>

#include "doctest.h"
#include "heatkernel.h"
#include "hk/kernel.hpp"
#include "hk/quadrature.hpp"

TEST_CASE("C API: config lifecycle and validation") {
  hk_config* cfg = hk_config_new();
  REQUIRE(cfg != nullptr);
  CHECK(hk_config_set_rel_tol(cfg, 1e-9) == HK_OK);
  CHECK(hk_config_set_rel_tol(cfg, 0.5) == HK_EDOMAIN);
  CHECK(hk_last_error()[0] != '\0');
  // A rejected setting leaves the previous value in force.
  hk_eval_report rep;
  CHECK(hk_eval_kernel(cfg, 1.0, 1.0, 0.0, &rep) == HK_OK);
  CHECK(hk_config_set_max_subdivisions(cfg, 0) == HK_EDOMAIN);
  CHECK(hk_config_set_abs_tol(cfg, -1.0) == HK_EDOMAIN);
  CHECK(hk_config_set_tail_rel_tol(cfg, 1e-12) == HK_OK);
  CHECK(hk_config_set_rel_tol(nullptr, 1e-8) == HK_EINVAL);
  hk_config_free(cfg);
  hk_config_free(nullptr);  // must be a no-op
}

TEST_CASE("C API: evaluation matches the C++ core") {
  hk_eval_report rep;
  REQUIRE(hk_eval_kernel(nullptr, 1.0, 1.0, 0.5, &rep) == HK_OK);
  const hk::QuadratureConfig cfg;
  const auto ref =
      hk::eval_kernel(hk::KernelQuery(1.0, 1.0, hk::Weight(0.5)), cfg);
  CHECK(rep.value == ref.value);
  CHECK(rep.error_estimate == ref.error_estimate);
  CHECK(rep.tail_bound == ref.tail_bound);
  CHECK(rep.evaluations == ref.evaluations);
  CHECK(rep.underflow == 0);

  hk_eval_report rep2;
  REQUIRE(hk_eval_kernel_points(nullptr, 1.0, 0, 1, 0, 2, 0.5, &rep2) ==
          HK_OK);
  double d = 0.0;
  REQUIRE(hk_hyperbolic_distance(0, 1, 0, 2, &d) == HK_OK);
  CHECK(d == doctest::Approx(M_LN2).epsilon(1e-15));
  hk_eval_report rep3;
  REQUIRE(hk_eval_kernel(nullptr, 1.0, d, 0.5, &rep3) == HK_OK);
  CHECK(rep2.value == doctest::Approx(rep3.value).epsilon(1e-12));
}

TEST_CASE("C API: status translation") {
  hk_eval_report rep;
  CHECK(hk_eval_kernel(nullptr, -1.0, 1.0, 0.0, &rep) == HK_EDOMAIN);
  CHECK(hk_eval_kernel(nullptr, 1.0, -1.0, 0.0, &rep) == HK_EDOMAIN);
  CHECK(hk_eval_kernel(nullptr, 1.0, 1.0, 200.0, &rep) == HK_EOVERFLOW);
  CHECK(hk_eval_kernel(nullptr, 1.0, 1.0, 0.0, nullptr) == HK_EINVAL);
  CHECK(hk_eval_kernel_points(nullptr, 1.0, 0, -1, 0, 2, 0.0, &rep) ==
        HK_EDOMAIN);
  double out;
  CHECK(hk_t2k(0.5, 1.0, &out) == HK_EDOMAIN);
  CHECK(hk_t2k(1.5, 0.0, &out) == HK_OK);
  CHECK(out == 2.0);
  CHECK(hk_t2k_prime(1.0, 1.0, &out) == HK_EDOMAIN);
  CHECK(hk_tail_bound(1.0, 1.0, 0.0, 1.5, &out) == HK_EDOMAIN);
  CHECK(hk_gaussian_tail(1.0, 0.0, 0.0, &out) == HK_OK);
  CHECK(out == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(hk_parabolic_cylinder_d_minus2(0.0, &out) == HK_OK);
  CHECK(out == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::strcmp(hk_status_name(HK_EOVERFLOW), "HK_EOVERFLOW") == 0);
}

TEST_CASE("C API: check-suite dispatch") {
  hk_check_report reports[8];
  int n = -1;
  CHECK(hk_run_checks(nullptr, "nosuch", reports, 8, &n) == HK_EINVAL);
  CHECK(n == 0);
  REQUIRE(hk_run_checks(nullptr, "tcheb", reports, 8, &n) == HK_OK);
  REQUIRE(n == 1);
  CHECK(std::strcmp(reports[0].suite, "tcheb") == 0);
  CHECK(reports[0].passed == 1);
  CHECK(reports[0].cases_run > 0);
  CHECK(hk_run_checks(nullptr, "tcheb", nullptr, 8, &n) == HK_EINVAL);
}
