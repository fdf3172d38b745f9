#include "hk/tcheb.hpp"

#include <cmath>
#include <limits>

#include "hk/errors.hpp"

namespace hk {

namespace {

// 2k log p may not exceed this; keeps products of T_{2k} with other
// moderate factors representable downstream.
const double kLogCap = 0.5 * std::log(std::numeric_limits<double>::max());

// arcosh(1 + d) for small d, where sqrt(x^2 - 1) would lose half the
// significant digits: sqrt(2d) (1 - d/12 + 3 d^2/160).
double acosh1p_small(double d) {
  return std::sqrt(2.0 * d) * (1.0 - d / 12.0 + 3.0 * d * d / 160.0);
}

}  // namespace

Weight::Weight(double k) : k(k) {
  if (!std::isfinite(k)) throw DomainError("weight k must be finite");
}

double t2k_shifted(double d, Weight w) {
  if (!(d >= 0.0)) throw DomainError("t2k: x must be >= 1");
  const double k2 = 2.0 * w.k;
  if (d < 1e-8) {
    const double a = k2 * acosh1p_small(d);
    if (std::fabs(a) > kLogCap)
      throw OverflowError("t2k overflow", std::fabs(a));
    return 2.0 * std::cosh(a);
  }
  const double x = 1.0 + d;
  double lp;
  if (x > 1e150) {
    lp = std::log(2.0) + std::log(x);  // p = x + sqrt(x^2-1) ~ 2x
  } else {
    lp = std::log(x + std::sqrt(d * (x + 1.0)));
  }
  const double a = k2 * lp;
  if (std::fabs(a) > kLogCap)
    throw OverflowError("t2k overflow", std::fabs(a));
  return 2.0 * std::cosh(a);
}

double t2k(double x, Weight w) {
  if (!(x >= 1.0)) throw DomainError("t2k: x must be >= 1");
  return t2k_shifted(x - 1.0, w);
}

double t2k_prime(double x, Weight w) {
  if (!(x > 1.0)) throw DomainError("t2k_prime: x must be > 1");
  if (w.k == 0.0) return 0.0;
  const double q = std::sqrt((x - 1.0) * (x + 1.0));
  double lp = x > 1e150 ? std::log(2.0) + std::log(x) : std::log(x + q);
  const double a = 2.0 * w.k * lp;
  if (std::fabs(a) > kLogCap)
    throw OverflowError("t2k_prime overflow", std::fabs(a));
  return (2.0 * w.k / q) * 2.0 * std::sinh(a);
}

double chebyshev_reference(double x, int n) {
  if (n < 0) throw DomainError("chebyshev_reference: n must be >= 0");
  if (n == 0) return 1.0;
  double tm1 = 1.0;
  double t = x;
  for (int i = 1; i < n; ++i) {
    const double tp1 = 2.0 * x * t - tm1;
    tm1 = t;
    t = tp1;
  }
  return t;
}

}  // namespace hk
