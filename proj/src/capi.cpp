#include "heatkernel.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "hk/asymptotics.hpp"
#include "hk/checks.hpp"
#include "hk/errors.hpp"
#include "hk/hyperbolic.hpp"
#include "hk/kernel.hpp"
#include "hk/quadrature.hpp"
#include "hk/tcheb.hpp"

struct hk_config {
  hk::QuadratureConfig cfg;
};

namespace {

thread_local std::string g_last_error;

hk_status fail(hk_status s, const char* what) {
  g_last_error = what;
  return s;
}

// Runs f, translating the library's exceptions into status codes.
template <typename F>
hk_status guarded(F&& f) {
  try {
    f();
    return HK_OK;
  } catch (const hk::OverflowError& e) {
    return fail(HK_EOVERFLOW, e.what());
  } catch (const hk::QuadratureError& e) {
    return fail(HK_EQUAD, e.what());
  } catch (const hk::DomainError& e) {
    return fail(HK_EDOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HK_EINVAL, e.what());
  } catch (const std::exception& e) {
    return fail(HK_EINTERNAL, e.what());
  } catch (...) {
    return fail(HK_EINTERNAL, "unknown error");
  }
}

hk::QuadratureConfig resolve(const hk_config* cfg) {
  return cfg ? cfg->cfg : hk::QuadratureConfig{};
}

void copy_str(char* dst, size_t cap, const std::string& src) {
  std::strncpy(dst, src.c_str(), cap - 1);
  dst[cap - 1] = '\0';
}

}  // namespace

extern "C" {

const char* hk_last_error(void) { return g_last_error.c_str(); }

const char* hk_status_name(hk_status s) {
  switch (s) {
    case HK_OK: return "HK_OK";
    case HK_EDOMAIN: return "HK_EDOMAIN";
    case HK_EOVERFLOW: return "HK_EOVERFLOW";
    case HK_EQUAD: return "HK_EQUAD";
    case HK_EINVAL: return "HK_EINVAL";
    case HK_EINTERNAL: return "HK_EINTERNAL";
  }
  return "HK_???";
}

hk_config* hk_config_new(void) { return new (std::nothrow) hk_config{}; }

void hk_config_free(hk_config* cfg) { delete cfg; }

hk_status hk_config_set_rel_tol(hk_config* cfg, double rel_tol) {
  if (!cfg) return fail(HK_EINVAL, "null config");
  return guarded([&] {
    hk::QuadratureConfig c = cfg->cfg;
    c.rel_tol = rel_tol;
    c.validate();
    cfg->cfg = c;
  });
}

hk_status hk_config_set_abs_tol(hk_config* cfg, double abs_tol) {
  if (!cfg) return fail(HK_EINVAL, "null config");
  return guarded([&] {
    hk::QuadratureConfig c = cfg->cfg;
    c.abs_tol = abs_tol;
    c.validate();
    cfg->cfg = c;
  });
}

hk_status hk_config_set_max_subdivisions(hk_config* cfg, int n) {
  if (!cfg) return fail(HK_EINVAL, "null config");
  return guarded([&] {
    hk::QuadratureConfig c = cfg->cfg;
    c.max_subdivisions = n;
    c.validate();
    cfg->cfg = c;
  });
}

hk_status hk_config_set_tail_rel_tol(hk_config* cfg, double tol) {
  if (!cfg) return fail(HK_EINVAL, "null config");
  return guarded([&] {
    hk::QuadratureConfig c = cfg->cfg;
    c.tail_rel_tol = tol;
    c.validate();
    cfg->cfg = c;
  });
}

hk_status hk_eval_kernel(const hk_config* cfg, double t, double r, double k,
                         hk_eval_report* out) {
  if (!out) return fail(HK_EINVAL, "null output pointer");
  return guarded([&] {
    const hk::EvalReport rep =
        hk::eval_kernel(hk::KernelQuery(t, r, hk::Weight(k)), resolve(cfg));
    out->value = rep.value;
    out->error_estimate = rep.error_estimate;
    out->tail_bound = rep.tail_bound;
    out->tail_cut = rep.tail_cut;
    out->evaluations = rep.evaluations;
    out->underflow = rep.underflow ? 1 : 0;
  });
}

hk_status hk_eval_kernel_points(const hk_config* cfg, double t, double zx,
                                double zy, double wx, double wy, double k,
                                hk_eval_report* out) {
  if (!out) return fail(HK_EINVAL, "null output pointer");
  return guarded([&] {
    const hk::EvalReport rep = hk::eval_kernel_points(
        t, hk::HalfPlanePoint(zx, zy), hk::HalfPlanePoint(wx, wy),
        hk::Weight(k), resolve(cfg));
    out->value = rep.value;
    out->error_estimate = rep.error_estimate;
    out->tail_bound = rep.tail_bound;
    out->tail_cut = rep.tail_cut;
    out->evaluations = rep.evaluations;
    out->underflow = rep.underflow ? 1 : 0;
  });
}

hk_status hk_hyperbolic_distance(double zx, double zy, double wx, double wy,
                                 double* out) {
  if (!out) return fail(HK_EINVAL, "null output pointer");
  return guarded([&] {
    *out = hk::hyperbolic_distance(hk::HalfPlanePoint(zx, zy),
                                   hk::HalfPlanePoint(wx, wy));
  });
}

hk_status hk_t2k(double x, double k, double* out) {
  if (!out) return fail(HK_EINVAL, "null output pointer");
  return guarded([&] { *out = hk::t2k(x, hk::Weight(k)); });
}

hk_status hk_t2k_prime(double x, double k, double* out) {
  if (!out) return fail(HK_EINVAL, "null output pointer");
  return guarded([&] { *out = hk::t2k_prime(x, hk::Weight(k)); });
}

hk_status hk_tail_bound(double r, double t, double k, double U, double* out) {
  if (!out) return fail(HK_EINVAL, "null output pointer");
  return guarded([&] { *out = hk::tail_bound(r, t, hk::Weight(k), U); });
}

hk_status hk_gaussian_tail(double a, double b, double U, double* out) {
  if (!out) return fail(HK_EINVAL, "null output pointer");
  return guarded([&] { *out = hk::gaussian_tail_closed_form(a, b, U); });
}

hk_status hk_parabolic_cylinder_d_minus2(double z, double* out) {
  if (!out) return fail(HK_EINVAL, "null output pointer");
  return guarded([&] { *out = hk::parabolic_cylinder_d_minus2(z); });
}

hk_status hk_run_checks(const hk_config* cfg, const char* suite,
                        hk_check_report* out, int capacity, int* n_written) {
  if (!suite || !out || !n_written || capacity < 1)
    return fail(HK_EINVAL, "bad arguments to hk_run_checks");
  *n_written = 0;
  return guarded([&] {
    const std::vector<hk::CheckReport> reports =
        hk::run_suites(suite, resolve(cfg));
    int n = 0;
    for (const hk::CheckReport& r : reports) {
      if (n >= capacity) break;
      hk_check_report& o = out[n++];
      copy_str(o.suite, sizeof o.suite, r.suite);
      o.cases_run = r.cases_run;
      o.worst_residual = r.worst_residual;
      copy_str(o.worst_case, sizeof o.worst_case, r.worst_case_input);
      o.passed = r.passed ? 1 : 0;
    }
    *n_written = n;
  });
}

}  // extern "C"
