#ifndef HK_HYPERBOLIC_HPP
#define HK_HYPERBOLIC_HPP

#include <functional>

#include "hk/quadrature.hpp"

namespace hk {

/// A point z = x + iy of the upper half-plane, y > 0 strictly.
struct HalfPlanePoint {
  double x;
  double y;
  HalfPlanePoint(double x, double y);
};

/// Geodesic distance r(z, w) = arcosh(1 + (|dx|^2 + |dy|^2)/(2 y_z y_w)).
/// Evaluated through log1p so that r near 0 keeps full precision.
double hyperbolic_distance(const HalfPlanePoint& z, const HalfPlanePoint& w);

/// 2*pi * int_0^tail_cut f(r) sinh(r) dr -- the integral of a radial
/// function against the hyperbolic area measure, truncated at tail_cut.
double radial_integral(const std::function<double(double)>& f,
                       double tail_cut, const QuadratureConfig& cfg);

}  // namespace hk

#endif
