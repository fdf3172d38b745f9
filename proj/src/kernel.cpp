#include "hk/kernel.hpp"

#include <cmath>
#include <limits>

#include "hk/asymptotics.hpp"
#include "hk/errors.hpp"

namespace hk {

namespace {

double logsinh(double x) {
  return x < 1.0 ? std::log(std::sinh(x))
                 : x - M_LN2 + std::log1p(-std::exp(-2.0 * x));
}

// log of e^{-t/4} / (4 pi t)^{3/2}
double log_prefactor(double t) {
  return -0.25 * t - 1.5 * std::log(4.0 * M_PI * t);
}

// Scaled (by e^{r^2/4t}) upper bound on the tail of the u-integral beyond
// U: minimum of the e^{-u/2} bound (needs c(U) > 0) and the constant
// 1/sqrt(2cosh U - 2cosh r) bound. T_{2k}(x) <= 2 e^{|k| u} throughout.
double scaled_tail_bound(double r, double t, double abs_k, double U,
                         double log_scale) {
  const double a = 1.0 / (4.0 * t);
  double bound = std::numeric_limits<double>::infinity();
  const double c = 1.0 - (1.0 + 2.0 * std::cosh(r)) * std::exp(-U);
  if (c > 0.0) {
    bound = (2.0 / std::sqrt(c)) *
            gaussian_tail_log_scaled(a, abs_k - 0.5, U, log_scale);
  }
  const double log_sqrt2d =
      0.5 * (2.0 * M_LN2 + logsinh(0.5 * (U + r)) + logsinh(0.5 * (U - r)));
  const double alt = 2.0 * gaussian_tail_log_scaled(a, abs_k, U,
                                                    log_scale - log_sqrt2d);
  return std::min(bound, alt);
}

}  // namespace

KernelQuery::KernelQuery(double t, double r, Weight k) : t(t), r(r), k(k) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw DomainError("kernel query requires t > 0");
  if (!(r >= 0.0) || !std::isfinite(r))
    throw DomainError("kernel query requires r >= 0");
}

double tail_bound(double r, double t, Weight k, double U) {
  if (!(r >= 0.0) || !(t > 0.0)) throw DomainError("tail_bound: bad r or t");
  if (!(U > r + 1.0)) throw DomainError("tail_bound: requires U > r + 1");
  return scaled_tail_bound(r, t, std::fabs(k.k), U, 0.0);
}

namespace detail {

ScaledEval eval_kernel_scaled(double t, double r, Weight k,
                              const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(t > 0.0) || !(r >= 0.0)) throw DomainError("bad kernel query");
  const double chr = std::cosh(r);
  const double chrm1 = 2.0 * std::sinh(0.5 * r) * std::sinh(0.5 * r);
  const double inv4t = 1.0 / (4.0 * t);

  // Piece A: u in [r, r+2] under u = arcosh(cosh r + s^2). The
  // substitution turns u e^{...}/sqrt(2cosh u - 2cosh r) du into
  // sqrt(2) (u/sinh u) e^{...} T_{2k} ds with an analytic integrand at 0.
  const auto f_sub = [&](double s) {
    const double w = chrm1 + s * s;
    const double u = std::log1p(w + std::sqrt(w * (w + 2.0)));
    const double sinh_u = std::sqrt(w * (w + 2.0));
    const double uos = u > 1e-8 ? u / sinh_u : 1.0;
    const double q = s * s / (chr + 1.0);  // x^2 - 1
    const double d = q / (1.0 + std::sqrt(1.0 + q));
    const double e = std::exp(-(u - r) * (u + r) * inv4t);
    return M_SQRT2 * uos * e * t2k_shifted(d, k);
  };
  // Piece B: u in [r+2, U], smooth, integrated directly.
  const auto f_direct = [&](double u) {
    const double log_sqrt2d = 0.5 * (2.0 * M_LN2 + logsinh(0.5 * (u + r)) +
                                     logsinh(0.5 * (u - r)));
    const double d = 2.0 * std::sinh(0.25 * (u + r)) *
                     std::sinh(0.25 * (u - r)) / std::cosh(0.5 * r);
    const double c1 = -(u - r) * (u + r) * inv4t - log_sqrt2d;
    return u * t2k_shifted(d, k) * std::exp(c1);
  };

  const double s_cut =
      std::sqrt(2.0 * std::sinh(r + 1.0) * std::sinh(1.0));  // u = r+2
  QuadResult part_a = integrate(f_sub, 0.0, s_cut, 0.5 * cfg.rel_tol, 0.0,
                                cfg.max_subdivisions);

  const double abs_k = std::fabs(k.k);
  const double b = abs_k - 0.5;
  const double log_scale = r * r * inv4t;
  const double tail_target_l =
      -std::log(cfg.tail_rel_tol) + 4.0 * (abs_k + 1.0);
  double U = std::max({r + 2.0, 2.0 * t * b + 2.0 * std::sqrt(t) + 2.0,
                       std::sqrt(4.0 * t * tail_target_l)});

  ScaledEval out;
  out.evaluations = part_a.evaluations;
  for (int iter = 0;; ++iter) {
    QuadResult part_b;
    if (U > r + 2.0)
      part_b = integrate(f_direct, r + 2.0, U, 0.5 * cfg.rel_tol, 0.0,
                         cfg.max_subdivisions);
    out.evaluations += part_b.evaluations;
    out.scaled_value = part_a.value + part_b.value;
    out.scaled_error = part_a.error + part_b.error;
    out.scaled_tail = scaled_tail_bound(r, t, abs_k, U, log_scale);
    out.tail_cut = U;
    if (out.scaled_tail <= cfg.tail_rel_tol * out.scaled_value) break;
    if (iter >= 40)
      throw QuadratureError("tail bound did not meet tolerance",
                            out.scaled_tail);
    U *= 1.3;
  }
  return out;
}

}  // namespace detail

EvalReport eval_kernel(const KernelQuery& q, const QuadratureConfig& cfg) {
  const detail::ScaledEval se =
      detail::eval_kernel_scaled(q.t, q.r, q.k, cfg);
  const double log_m = log_prefactor(q.t) - q.r * q.r / (4.0 * q.t);
  const double m = std::exp(log_m);
  EvalReport rep;
  rep.tail_cut = se.tail_cut;
  rep.evaluations = se.evaluations;
  rep.value = m * se.scaled_value;
  rep.error_estimate = m * se.scaled_error;
  rep.tail_bound = m * se.scaled_tail;
  if (se.scaled_value > 0.0 &&
      rep.value < std::numeric_limits<double>::min()) {
    rep.value = 0.0;
    rep.error_estimate = std::numeric_limits<double>::min();
    rep.underflow = true;
  }
  return rep;
}

EvalReport eval_kernel_points(double t, const HalfPlanePoint& z,
                              const HalfPlanePoint& w, Weight k,
                              const QuadratureConfig& cfg) {
  return eval_kernel(KernelQuery(t, hyperbolic_distance(z, w), k), cfg);
}

}  // namespace hk
