#include "hk/special.hpp"

#include <cmath>

namespace hk {

// Pinned erf-family implementation for the whole project: glibc's
// std::erfc (< 2 ulp documented accuracy). Change it here or nowhere.
double erfc(double x) { return std::erfc(x); }

double erfcx(double x) {
  if (x < 0.0) return 2.0 * std::exp(x * x) - erfcx(-x);
  if (x <= 25.0) return std::exp(x * x) * std::erfc(x);
  // Asymptotic series 1/(x sqrt(pi)) sum (-1)^n (2n-1)!!/(2x^2)^n;
  // at x = 25 the truncation error is far below double roundoff.
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n <= 8; ++n) {
    term *= -(2.0 * n - 1.0) * inv2x2;
    sum += term;
  }
  return sum / (x * 1.7724538509055160273);
}

}  // namespace hk
