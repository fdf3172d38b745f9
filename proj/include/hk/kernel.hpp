#ifndef HK_KERNEL_HPP
#define HK_KERNEL_HPP

#include "hk/hyperbolic.hpp"
#include "hk/quadrature.hpp"
#include "hk/tcheb.hpp"

namespace hk {

/// One evaluation request: time t > 0, hyperbolic distance r >= 0, weight k.
struct KernelQuery {
  double t;
  double r;
  Weight k;
  KernelQuery(double t, double r, Weight k);
};

/// Result of eval_kernel. On success
///   error_estimate + tail_bound <= rel_tol*value + abs_tol.
/// underflow is set when the true value is positive but below the smallest
/// normal double; value is then 0 and error_estimate is the underflow
/// threshold.
struct EvalReport {
  double value = 0.0;
  double error_estimate = 0.0;
  double tail_bound = 0.0;
  double tail_cut = 0.0;  // truncation point U of the u-integral
  long evaluations = 0;
  bool underflow = false;
};

/// K(t,r): adaptive quadrature of
///   e^{-t/4}/(4 pi t)^{3/2} int_r^inf u e^{-u^2/4t}
///       T_{2k}(cosh(u/2)/cosh(r/2)) / sqrt(2cosh u - 2cosh r) du
/// with the endpoint singularity removed by u = arcosh(cosh r + s^2) and
/// the tail beyond U certified by tail_bound.
EvalReport eval_kernel(const KernelQuery& q, const QuadratureConfig& cfg);

/// r = hyperbolic_distance(z, w), then eval_kernel.
EvalReport eval_kernel_points(double t, const HalfPlanePoint& z,
                              const HalfPlanePoint& w, Weight k,
                              const QuadratureConfig& cfg);

/// Certified upper bound on int_U^inf of the raw u-integrand
/// (no e^{-t/4}/(4 pi t)^{3/2} prefactor). Requires U > r + 1.
double tail_bound(double r, double t, Weight k, double U);

namespace detail {

/// Rescaled evaluation: the bare u-integral, so that
///   K(t,r) = e^{-t/4}/(4 pi t)^{3/2} * e^{-r^2/4t} * scaled_value.
/// Used by the asymptotic suites where the plain kernel value would
/// underflow.
struct ScaledEval {
  double scaled_value = 0.0;
  double scaled_error = 0.0;
  double scaled_tail = 0.0;
  double tail_cut = 0.0;
  long evaluations = 0;
};

ScaledEval eval_kernel_scaled(double t, double r, Weight k,
                              const QuadratureConfig& cfg);

}  // namespace detail

}  // namespace hk

#endif
