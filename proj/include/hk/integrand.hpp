#ifndef HK_INTEGRAND_HPP
#define HK_INTEGRAND_HPP

#include <utility>

#include "hk/tcheb.hpp"

namespace hk {

/// The Fay bracket I_k(u,r) evaluated through its pre-simplification form:
/// products (e^u - cosh r +- e^{u/2} sqrt(2cosh u - 2cosh r)) *
/// (sqrt(2) sinh(u/2) -+ sqrt(cosh u - cosh r)) are formed first, then
/// raised to the power 2k, then divided by (cosh r - 1)^{2k}(cosh r + 1)^k.
/// Requires u > r > 0 (the denominator vanishes at r = 0).
double fay_bracket_original(double u, double r, Weight k);

/// The simplified form I_k(u,r) = T_{2k}(cosh(u/2)/cosh(r/2)), u > r >= 0.
/// Always >= 2 and -> 2 as u decreases to r.
double i_k_simplified(double u, double r, Weight k);

/// Solves e^{Theta} sinh r = e^u - cosh r + e^{u/2} sqrt(2cosh u - 2cosh r)
/// for Theta and returns the residuals of both branch equations, each
/// normalized by the magnitude of the branch terms. Test-suite helper.
std::pair<double, double> theta_relation_residual(double u, double r);

/// Magnitude of the contour integral H(u,t)/i =
/// (u/2t) sqrt(pi/t) e^{-t/4} e^{-u^2/4t}, u > 0, t > 0.
double h_closed_form(double u, double t);

}  // namespace hk

#endif
