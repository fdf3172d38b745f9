#ifndef HK_ASYMPTOTICS_HPP
#define HK_ASYMPTOTICS_HPP

#include <utility>
#include <vector>

#include "hk/quadrature.hpp"

namespace hk {

enum class Regime { SmallT, LargeT };

/// Empirical record of a big-O check: the rescaled kernel sampled along a
/// t-grid. verdict is true iff every ratio is finite, no ratio exceeds
/// 10x the ratio at the first grid point, and the final grid step grows
/// by no more than 10%.
struct AsymptoticReport {
  Regime regime;
  double r = 0.0;
  double k = 0.0;
  std::vector<std::pair<double, double>> samples;  // (t, ratio)
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  bool verdict = false;
};

/// ratio(t) = K(t,r) t^{3/2} e^{r^2/4t} over a descending grid t -> 0.
/// Evaluated through the rescaled kernel so e^{r^2/4t} never overflows.
AsymptoticReport check_small_t(double r, double k,
                               const std::vector<double>& t_grid,
                               const QuadratureConfig& cfg);

/// ratio(t) = K(t,r) e^{t/4} t^{3/2} over an ascending grid t -> inf.
/// Kernel overflow at a grid point is recorded as an infinite ratio
/// (verdict false) rather than thrown.
AsymptoticReport check_large_t(double r, double k,
                               const std::vector<double>& t_grid,
                               const QuadratureConfig& cfg);

/// int_U^inf u e^{-a u^2 + b u} du in closed form (exp + erfc), a > 0,
/// U >= 0. Strictly decreasing in U, strictly increasing in b.
double gaussian_tail_closed_form(double a, double b, double U);

/// e^{log_scale} * gaussian_tail_closed_form(a, b, U), with the scale
/// folded into the exponentials so neither factor over/underflows alone.
double gaussian_tail_log_scaled(double a, double b, double U,
                                double log_scale);

/// Parabolic cylinder function D_{-2}(z) via the erfc closed form
///   D_{-2}(z) = e^{-z^2/4} (1 - z sqrt(pi/2) erfcx(z/sqrt(2))),
/// equal to e^{-z^2/4} int_0^inf x e^{-x^2/2 - zx} dx.
double parabolic_cylinder_d_minus2(double z);

}  // namespace hk

#endif
