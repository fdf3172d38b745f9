#ifndef HK_QUADRATURE_HPP
#define HK_QUADRATURE_HPP

#include <functional>

namespace hk {

/// Tolerances and budgets shared by every adaptive integral in the library.
struct QuadratureConfig {
  double rel_tol = 1e-8;        // in (0, 1e-2]
  double abs_tol = 0.0;         // >= 0
  int max_subdivisions = 4000;  // <= 1e6
  double tail_rel_tol = 1e-10;  // tail bound relative to the partial value

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // certified error estimate
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod 15/7 on [a, b]; bisects the interval of largest
/// estimated error. Throws QuadratureError if the tolerance
/// max(rel_tol*|value|, abs_tol) is not met within max_subdivisions.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double rel_tol, double abs_tol,
                     int max_subdivisions);

}  // namespace hk

#endif
