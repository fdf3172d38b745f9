#ifndef HK_TCHEB_HPP
#define HK_TCHEB_HPP

namespace hk {

/// Weight of the Maass-Laplacian; any finite real, either sign.
struct Weight {
  double k;
  explicit Weight(double k);
};

/// Generalized Chebyshev function
///   T_{2k}(x) = (x + sqrt(x^2-1))^{2k} + (x - sqrt(x^2-1))^{2k},  x >= 1.
/// Computed from p = x + sqrt(x^2-1) and 1/p only; never the subtractive
/// branch. Exactly 2 at x = 1. Throws OverflowError (carrying the
/// log-scale value) when 2|k| log p exceeds log(DBL_MAX)/2.
double t2k(double x, Weight k);

/// Same, but parameterized by d = x - 1 (d >= 0). Callers that know d to
/// full precision (the kernel integrand does) avoid the cancellation in
/// recomputing x - 1 near the endpoint.
double t2k_shifted(double d, Weight k);

/// T'_{2k}(x) = (2k/sqrt(x^2-1)) ((x+sqrt(x^2-1))^{2k} - (x-sqrt(x^2-1))^{2k}),
/// x > 1 strictly (the formula is singular at x = 1).
double t2k_prime(double x, Weight k);

/// Classical Chebyshev polynomial T_n(x) by the three-term recurrence.
double chebyshev_reference(double x, int n);

}  // namespace hk

#endif
