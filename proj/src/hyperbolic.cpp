#include "hk/hyperbolic.hpp"

#include <cmath>

#include "hk/errors.hpp"

namespace hk {

HalfPlanePoint::HalfPlanePoint(double x, double y) : x(x), y(y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw DomainError("half-plane point must have finite coordinates");
  if (!(y > 0.0)) throw DomainError("half-plane point requires y > 0");
}

double hyperbolic_distance(const HalfPlanePoint& z, const HalfPlanePoint& w) {
  const double dx = z.x - w.x;
  const double dy = z.y - w.y;
  const double s = (dx * dx + dy * dy) / (2.0 * z.y * w.y);
  // arcosh(1 + s) = log(1 + s + sqrt(s(s+2))), via log1p for small s.
  return std::log1p(s + std::sqrt(s * (s + 2.0)));
}

double radial_integral(const std::function<double(double)>& f,
                       double tail_cut, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(tail_cut > 0.0)) throw DomainError("tail_cut must be > 0");
  const auto g = [&f](double r) { return f(r) * std::sinh(r); };
  QuadResult q = integrate(g, 0.0, tail_cut, cfg.rel_tol, cfg.abs_tol,
                           cfg.max_subdivisions);
  return 2.0 * M_PI * q.value;
}

}  // namespace hk
