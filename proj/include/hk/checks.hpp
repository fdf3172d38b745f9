#ifndef HK_CHECKS_HPP
#define HK_CHECKS_HPP

#include <string>
#include <vector>

#include "hk/quadrature.hpp"
#include "hk/tcheb.hpp"

namespace hk {

struct CheckReport {
  std::string suite;
  long cases_run = 0;
  double worst_residual = 0.0;
  std::string worst_case_input;
  bool passed = false;
};

/// K(t, r_{i+1}) < K(t, r_i) with margin exceeding the sum of the two
/// certified error bounds, for every consecutive pair of the grid.
CheckReport check_monotone_r(double t, Weight k,
                             const std::vector<double>& r_grid,
                             const QuadratureConfig& cfg);

/// Sign check of the two summands of the radial-monotonicity integrand
/// decomposition: term1 < 0, term2 <= 0 (zero only at k = 0), sum < 0,
/// at every sample u > r.
CheckReport check_integrand_inequality(double t, double r, Weight k,
                                       const std::vector<double>& u_samples);

/// I1(t,r) (the u-integral over (r, r+1) of the rescaled integrand) is
/// dominated, for every t in the grid, by an explicit t-free majorant.
CheckReport check_i1_boundedness(const std::vector<double>& t_grid, double r,
                                 Weight k, const QuadratureConfig& cfg);

/// Named suites: tcheb, bracket, kernel, monotone, asymptotics, tails.
/// "all" runs every suite in that deterministic order. Throws
/// std::invalid_argument for an unknown name.
std::vector<CheckReport> run_suites(const std::string& name,
                                    const QuadratureConfig& cfg);

/// Every suite on its default grids, deterministic ordering.
std::vector<CheckReport> run_all(const QuadratureConfig& cfg);

}  // namespace hk

#endif
