// Independent numerical oracles for the test suite. Nothing here calls
// into the library's quadrature or special-function code: Simpson rules,
// a geodesic polyline length, and a naive endpoint-split kernel engine
// provide second opinions along entirely different code paths.

#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

#include <cmath>
#include <functional>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Simpson with step doubling until two refinements agree to rel; needed
// where the integral is an exponentially small residue of cancelling
// oscillations and no fixed step count is adequate.
inline double simpson_converged(const std::function<double(double)>& f,
                                double a, double b, int n0, double rel) {
  double prev = simpson(f, a, b, n0);
  for (int n = 2 * n0; n <= (1 << 24); n *= 2) {
    const double cur = simpson(f, a, b, n);
    if (std::fabs(cur - prev) <= rel * std::fabs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

// Length of an inscribed polyline along the geodesic arc from z to w,
// each chord weighted by 1/y at the chord's mid-parameter point;
// refined until two consecutive doublings agree to 1e-10 relative.
inline double polyline_distance(double x1, double y1, double x2, double y2) {
  // Point at parameter s in [0, 1] along the geodesic.
  std::function<void(double, double&, double&)> at;
  if (std::fabs(x1 - x2) < 1e-12) {
    at = [&](double s, double& px, double& py) {
      px = x1;
      py = y1 * std::pow(y2 / y1, s);  // geometric in y along the ray
    };
  } else {
    const double c =
        (x2 * x2 + y2 * y2 - x1 * x1 - y1 * y1) / (2.0 * (x2 - x1));
    const double R = std::hypot(x1 - c, y1);
    const double a1 = std::atan2(y1, x1 - c);
    const double a2 = std::atan2(y2, x2 - c);
    at = [=](double s, double& px, double& py) {
      const double a = a1 + s * (a2 - a1);
      px = c + R * std::cos(a);
      py = R * std::sin(a);
    };
  }
  const auto length = [&](int n) {
    double total = 0.0;
    double px0, py0, px1, py1, mx, my;
    at(0.0, px0, py0);
    for (int i = 0; i < n; ++i) {
      at((i + 1.0) / n, px1, py1);
      at((i + 0.5) / n, mx, my);
      total += std::hypot(px1 - px0, py1 - py0) / my;
      px0 = px1;
      py0 = py1;
    }
    return total;
  };
  double prev = length(256);
  for (int n = 512; n <= (1 << 22); n *= 2) {
    const double cur = length(n);
    if (std::fabs(cur - prev) <= 1e-10 * std::fabs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

// Naive endpoint-split evaluation of the heat kernel:
//   e^{-t/4}/(4 pi t)^{3/2} int_r^inf u e^{-u^2/4t} T_{2k}(x(u))
//       / sqrt(2 cosh u - 2 cosh r) du
// with an analytic closure of the 1/sqrt singularity on [r, r+2^-27],
// dyadically refined Simpson panels up to r+1, and a plain fixed-step
// Simpson rule beyond. Valid for r > 0. Shares no code with the library
// engine (different split, direct subtraction, std::pow for T_{2k}).
inline double naive_kernel(double t, double r, double k) {
  const double chr = std::cosh(r);
  const auto g = [&](double u) {
    const double x = std::cosh(0.5 * u) / std::cosh(0.5 * r);
    const double p = x + std::sqrt(x * x - 1.0);
    const double T = std::pow(p, 2.0 * k) + std::pow(p, -2.0 * k);
    return u * std::exp(-u * u / (4.0 * t)) * T;
  };
  const auto f = [&](double u) {
    return g(u) / std::sqrt(2.0 * (std::cosh(u) - chr));
  };
  const double eps = std::ldexp(1.0, -27);
  // int_r^{r+eps} ~ g(r) / sqrt(2 sinh r (u - r)) du.
  double total = g(r) * 2.0 * std::sqrt(eps) / std::sqrt(2.0 * std::sinh(r));
  for (int m = 26; m >= 0; --m)
    total += simpson(f, r + std::ldexp(1.0, -(m + 1)), r + std::ldexp(1.0, -m),
                     64);
  const double U =
      r + 2.0 * t * (2.0 * std::fabs(k) + 1.0) + 30.0 * std::sqrt(t + 1.0) +
      20.0;
  total += simpson(f, r + 1.0, U, 2 * static_cast<int>(400.0 * (U - r - 1.0)));
  return total * std::exp(-0.25 * t) / std::pow(4.0 * M_PI * t, 1.5);
}

}  // namespace oracle

#endif
