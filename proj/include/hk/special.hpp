#ifndef HK_SPECIAL_HPP
#define HK_SPECIAL_HPP

namespace hk {

// The project's single pinned choice of erf-family implementation lives
// here (see special.cpp). Everything downstream (tail bounds, D_{-2})
// inherits its accuracy.

double erfc(double x);

/// Scaled complement erfcx(x) = exp(x^2) erfc(x), stable for large x.
double erfcx(double x);

}  // namespace hk

#endif
