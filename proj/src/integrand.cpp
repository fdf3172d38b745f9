#include "hk/integrand.hpp"

#include <cmath>

#include "hk/errors.hpp"

namespace hk {

namespace {

struct BracketParts {
  double a_plus;    // e^u - cosh r + e^{u/2} sqrt(2cosh u - 2cosh r)
  double a_minus;   // same with the minus sign, via sinh^2 r / a_plus
  double b_plus;    // sqrt(2) sinh(u/2) + sqrt(cosh u - cosh r)
  double b_minus;   // same with the minus sign, via (cosh r - 1)/b_plus
  double eu_m_chr;  // e^u - cosh r, cancellation-free
  double sqrt2d;    // sqrt(2cosh u - 2cosh r)
};

// All pieces through the half-angle identity
// cosh u - cosh r = 2 sinh((u+r)/2) sinh((u-r)/2), which stays accurate
// both near u = r and for large u.
BracketParts bracket_parts(double u, double r) {
  BracketParts p;
  const double d = 2.0 * std::sinh(0.5 * (u + r)) * std::sinh(0.5 * (u - r));
  p.sqrt2d = std::sqrt(2.0 * d);
  p.eu_m_chr = std::sinh(u) + d;  // e^u - cosh r = sinh u + (cosh u - cosh r)
  p.a_plus = p.eu_m_chr + std::exp(0.5 * u) * p.sqrt2d;
  const double shr = std::sinh(r);
  p.a_minus = shr * shr / p.a_plus;
  p.b_plus = std::sqrt(2.0) * std::sinh(0.5 * u) + std::sqrt(d);
  const double chrm1 = 2.0 * std::sinh(0.5 * r) * std::sinh(0.5 * r);
  p.b_minus = chrm1 / p.b_plus;
  return p;
}

}  // namespace

double fay_bracket_original(double u, double r, Weight w) {
  if (!(r > 0.0))
    throw DomainError("fay_bracket_original: r = 0, use simplified form");
  if (!(u > r)) throw DomainError("fay_bracket_original: requires u > r");
  const BracketParts p = bracket_parts(u, r);
  const double prod1 = p.a_plus * p.b_minus;
  const double prod2 = p.a_minus * p.b_plus;
  if (!(prod1 > 0.0) || !(prod2 > 0.0))
    throw DomainError("fay_bracket_original: non-positive product");
  const double chrm1 = 2.0 * std::sinh(0.5 * r) * std::sinh(0.5 * r);
  const double chrp1 = 2.0 * std::cosh(0.5 * r) * std::cosh(0.5 * r);
  const double k2 = 2.0 * w.k;
  const double den = k2 * std::log(chrm1) + w.k * std::log(chrp1);
  const double e1 = k2 * std::log(prod1) - den;
  const double e2 = k2 * std::log(prod2) - den;
  if (e1 > 705.0 || e2 > 705.0)
    throw OverflowError("fay_bracket_original overflow", std::max(e1, e2));
  return std::exp(e1) + std::exp(e2);
}

double i_k_simplified(double u, double r, Weight w) {
  if (!(r >= 0.0) || !(u > r))
    throw DomainError("i_k_simplified: requires u > r >= 0");
  // x - 1 = 2 sinh((u+r)/4) sinh((u-r)/4) / cosh(r/2), exact near u = r.
  const double d = 2.0 * std::sinh(0.25 * (u + r)) *
                   std::sinh(0.25 * (u - r)) / std::cosh(0.5 * r);
  return t2k_shifted(d, w);
}

std::pair<double, double> theta_relation_residual(double u, double r) {
  if (!(r > 0.0) || !(u > r))
    throw DomainError("theta_relation_residual: requires u > r > 0");
  const BracketParts p = bracket_parts(u, r);
  const double shr = std::sinh(r);
  const double theta = std::log(p.a_plus / shr);
  const double scale =
      std::max(std::fabs(p.eu_m_chr), std::exp(0.5 * u) * p.sqrt2d);
  const double res_plus = (std::exp(theta) * shr - p.a_plus) / scale;
  // The minus branch is evaluated by direct subtraction: that is the
  // relation under test.
  const double a_minus_direct =
      (std::exp(u) - std::cosh(r)) - std::exp(0.5 * u) * p.sqrt2d;
  const double res_minus = (std::exp(-theta) * shr - a_minus_direct) / scale;
  return {res_plus, res_minus};
}

double h_closed_form(double u, double t) {
  if (!(u > 0.0) || !(t > 0.0))
    throw DomainError("h_closed_form: requires u > 0, t > 0");
  return (u / (2.0 * t)) * std::sqrt(M_PI / t) *
         std::exp(-0.25 * t - u * u / (4.0 * t));
}

}  // namespace hk
