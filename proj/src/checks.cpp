#include "hk/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

#include "hk/asymptotics.hpp"
#include "hk/errors.hpp"
#include "hk/hyperbolic.hpp"
#include "hk/integrand.hpp"
#include "hk/kernel.hpp"
#include "hk/lowdisc.hpp"
#include "hk/special.hpp"

namespace hk {

namespace {

std::string fmt(const char* f, ...) {
  char buf[128];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// Fixed-step composite Simpson; deliberately independent of the adaptive
// Gauss-Kronrod engine so the two integration routes never share code.
double simpson(const std::function<double(double)>& f, double a, double b,
               int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Tracks the worst residual across heterogeneous sub-checks. Residuals
// are normalized by their own tolerance, so pass <=> worst <= 1.
struct Worst {
  double value = 0.0;
  std::string at = "-";
  long cases = 0;
  void add(double residual_over_tol, const std::string& where) {
    ++cases;
    if (residual_over_tol > value) {
      value = residual_over_tol;
      at = where;
    }
  }
};

CheckReport finish(const std::string& suite, const Worst& w) {
  CheckReport rep;
  rep.suite = suite;
  rep.cases_run = w.cases;
  rep.worst_residual = w.value;
  rep.worst_case_input = w.at;
  rep.passed = w.value <= 1.0;
  return rep;
}

// The raw u-integrand of the rescaled kernel integral (no prefactor,
// shifted Gaussian e^{-(u^2-r^2)/4t}); used by the brute-force tails.
double raw_integrand(double u, double r, double t, Weight k) {
  const double d2 =
      2.0 * std::sinh(0.5 * (u + r)) * std::sinh(0.5 * (u - r));
  const double x =
      std::cosh(0.5 * u) / std::cosh(0.5 * r);
  return u * std::exp(-(u - r) * (u + r) / (4.0 * t)) * t2k(x, k) /
         std::sqrt(2.0 * d2);
}

// ------------------------------------------------------------------
// tcheb suite
// ------------------------------------------------------------------

CheckReport suite_tcheb() {
  Worst w;
  // Reduction to 2x classical Chebyshev for 2k = 0..8.
  for (int n = 0; n <= 8; ++n) {
    const Weight k(0.5 * n);
    for (int i = 0; i < 1000; ++i) {
      const double x = 1.0 + 19.0 * i / 999.0;
      const double a = t2k(x, k);
      const double b = 2.0 * chebyshev_reference(x, n);
      w.add(std::fabs(a - b) / (1e-12 * a), fmt("reduction n=%d x=%.3f", n, x));
    }
  }
  // Lower bound, evenness in k, monotonicity in x.
  const double ks[] = {-3.0, -0.7, 0.0, 0.25, 1.0, 2.5};
  for (double kk : ks) {
    double prev = -1.0;
    for (int i = 0; i <= 400; ++i) {
      const double x = 1.0 + 19.0 * i / 400.0;
      const double v = t2k(x, Weight(kk));
      w.add((2.0 - v) / 1e-13, fmt("lower-bound k=%.2f x=%.3f", kk, x));
      const double veven = t2k(x, Weight(-kk));
      w.add(std::fabs(v - veven) / (1e-15 * v), fmt("evenness k=%.2f", kk));
      if (kk != 0.0 && prev >= 0.0)
        w.add((prev - v) / (1e-13 * v), fmt("monotone k=%.2f x=%.3f", kk, x));
      prev = v;
    }
  }
  // Growth bound T_{2k}(cosh(u/2)/cosh(r/2)) <= 2^{2|k|+2} e^{|k|u}.
  for (double kk : ks)
    for (double r : {0.0, 0.5, 2.0})
      for (double gap : {1e-3, 0.1, 1.0, 5.0, 20.0}) {
        const double u = r + gap;
        const double v = i_k_simplified(u, r, Weight(kk));
        const double cap =
            std::exp((2.0 * std::fabs(kk) + 2.0) * M_LN2 + std::fabs(kk) * u);
        w.add(v / cap, fmt("growth k=%.2f r=%.2f u=%.3f", kk, r, u));
      }
  // Derivative vs central finite differences, step 1e-6, rel tol 1e-6.
  for (double kk : {-3.0, -0.7, 0.25, 1.0, 2.5}) {
    for (int i = 0; i <= 40; ++i) {
      const double x = (1.0 + 1e-3) * std::pow(50.0 / (1.0 + 1e-3), i / 40.0);
      const double h = 1e-6;
      const double fd =
          (t2k(x + h, Weight(kk)) - t2k(x - h, Weight(kk))) / (2.0 * h);
      const double an = t2k_prime(x, Weight(kk));
      const double scale = std::max(std::fabs(an), std::fabs(fd));
      if (scale > 0.0)
        w.add(std::fabs(fd - an) / (1e-6 * scale),
              fmt("derivative k=%.2f x=%.4f", kk, x));
    }
  }
  return finish("tcheb", w);
}

// ------------------------------------------------------------------
// bracket suite (Fay bracket equivalence, theta relation, H identity)
// ------------------------------------------------------------------

double h_oracle(double u, double t) {
  // Imaginary part of -e^{-t/4} int e^{-ty^2 - iuy} y dy, evaluated as
  // 2 e^{-t/4} int_0^inf y sin(uy) e^{-ty^2} dy; truncation at y = 12/sqrt(t)
  // leaves a remainder below e^{-144}. The value is an exponentially small
  // residue of cancelling oscillations, so the step is halved until two
  // refinements agree to 1e-10 instead of trusting any fixed count.
  const double cut = 12.0 / std::sqrt(t);
  const auto f = [u, t](double y) {
    return y * std::sin(u * y) * std::exp(-t * y * y);
  };
  int n = 2 * static_cast<int>(std::ceil(3000.0 / std::sqrt(t) / 2.0));
  double prev = simpson(f, 0.0, cut, n);
  for (n *= 2; n <= (1 << 24); n *= 2) {
    const double cur = simpson(f, 0.0, cut, n);
    if (std::fabs(cur - prev) <= 1e-10 * std::fabs(cur))
      return 2.0 * std::exp(-0.25 * t) * cur;
    prev = cur;
  }
  return 2.0 * std::exp(-0.25 * t) * prev;
}

CheckReport suite_bracket() {
  Worst w;
  const double ks[] = {-2.3, -1.0, -0.5, 0.0, 0.4, 1.0, 1.5, 2.7};
  unsigned long long idx = 1;  // Halton(2,3) offset 1, pinned
  for (double kk : ks) {
    for (int i = 0; i < 1250; ++i, ++idx) {
      const double r = 1e-3 + (5.0 - 1e-3) * radical_inverse(idx, 2);
      const double gap = 1e-4 * std::pow(10.0, 5.0 * radical_inverse(idx, 3));
      const double u = r + gap;
      const double a = fay_bracket_original(u, r, Weight(kk));
      const double b = i_k_simplified(u, r, Weight(kk));
      w.add(std::fabs(a - b) / (1e-10 * b),
            fmt("bracket u=%.4f r=%.4f k=%.2f", u, r, kk));
    }
  }
  // Theta-relation residuals, including a near-degenerate pair.
  const std::pair<double, double> uts[] = {
      {2.0, 1.0}, {1.0001, 1.0}, {5.0, 0.2}, {0.4, 0.3}, {10.0, 4.0}};
  for (auto [u, r] : uts) {
    const auto [rp, rm] = theta_relation_residual(u, r);
    const double tol = u - r < 1e-3 ? 1e-9 : 1e-12;
    w.add(std::fabs(rp) / tol, fmt("theta+ u=%.4f r=%.2f", u, r));
    w.add(std::fabs(rm) / tol, fmt("theta- u=%.4f r=%.2f", u, r));
  }
  // Product identity (e^u - cosh r)^2 - e^u(2cosh u - 2cosh r) = sinh^2 r,
  // residual measured against the uncancelled scale.
  for (int i = 0; i < 200; ++i) {
    const double r = 0.3 + 2.7 * radical_inverse(i + 1, 2);
    const double u = r + 1e-3 + (4.0 - r) * radical_inverse(i + 1, 3);
    const double lhs = std::pow(std::exp(u) - std::cosh(r), 2) -
                       std::exp(u) * (2.0 * std::cosh(u) - 2.0 * std::cosh(r));
    const double rhs = std::sinh(r) * std::sinh(r);
    const double scale = std::pow(std::exp(u) - std::cosh(r), 2);
    w.add(std::fabs(lhs - rhs) / (1e-12 * scale),
          fmt("product-id u=%.3f r=%.3f", u, r));
  }
  // H(u,t) closed form against the oscillatory-integral oracle. The grid
  // keeps u^2/4t <= 9: beyond that the oracle's answer is a residue of
  // cancellations below the double-precision floor of the 1e-8 match.
  for (double u : {0.5, 1.0, 1.5, 2.0, 3.0})
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double cf = h_closed_form(u, t);
      const double num = h_oracle(u, t);
      w.add(std::fabs(cf - num) / (1e-8 * cf), fmt("H u=%.1f t=%.2f", u, t));
    }
  return finish("bracket", w);
}

// ------------------------------------------------------------------
// kernel suite
// ------------------------------------------------------------------

CheckReport suite_kernel(const QuadratureConfig& cfg) {
  Worst w;
  // Positivity and weight symmetry.
  for (double t : {0.1, 1.0, 10.0})
    for (double r : {0.0, 0.5, 2.0})
      for (double kk : {0.0, 0.7, 1.3}) {
        const EvalReport a = eval_kernel(KernelQuery(t, r, Weight(kk)), cfg);
        w.add(a.value > 0.0 ? 0.0 : 2.0, fmt("positivity t=%g r=%g", t, r));
        const EvalReport b = eval_kernel(KernelQuery(t, r, Weight(-kk)), cfg);
        w.add(std::fabs(a.value - b.value) / (1e-12 * a.value),
              fmt("weight-symmetry t=%g r=%g k=%g", t, r, kk));
      }
  // Tolerance honesty: halving rel_tol moves the value by at most the
  // previously certified error.
  for (double t : {0.2, 1.0, 5.0})
    for (double r : {0.3, 1.5}) {
      QuadratureConfig tight = cfg;
      const EvalReport a = eval_kernel(KernelQuery(t, r, Weight(0.8)), cfg);
      tight.rel_tol = 0.5 * cfg.rel_tol;
      const EvalReport b = eval_kernel(KernelQuery(t, r, Weight(0.8)), tight);
      const double budget = a.error_estimate + a.tail_bound;
      w.add(std::fabs(a.value - b.value) / std::max(budget, 1e-300),
            fmt("honesty t=%g r=%g", t, r));
    }
  // Monotone tail bound in U.
  {
    double prev = std::numeric_limits<double>::infinity();
    for (double U : {4.0, 5.0, 6.0, 8.0, 10.0, 12.0}) {
      const double tb = tail_bound(1.0, 1.0, Weight(1.5), U);
      w.add(tb < prev ? 0.0 : 2.0, fmt("tail-monotone U=%g", U));
      prev = tb;
    }
  }
  // Heat mass: exactly 1 at weight 0; computed and reported, but not
  // asserted, away from weight 0.
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::min(cfg.rel_tol, 1e-9);
  double mass_k = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const auto f = [&](double r) {
      return eval_kernel(KernelQuery(t, r, Weight(0.0)), inner).value;
    };
    const double cut = 12.0 * std::sqrt(t) + 2.0 * t + 8.0;
    const double mass = radial_integral(f, cut, inner);
    w.add(std::fabs(mass - 1.0) / 1e-6, fmt("heat-mass t=%g", t));
    if (t == 1.0) {
      const auto g = [&](double r) {
        return eval_kernel(KernelQuery(t, r, Weight(0.7)), inner).value;
      };
      mass_k = radial_integral(g, cut, inner);
    }
  }
  CheckReport rep = finish("kernel", w);
  rep.worst_case_input += fmt(" [mass(k=0.7,t=1)=%.6f unasserted]", mass_k);
  return rep;
}

// ------------------------------------------------------------------
// monotone suite (section-4.1 machinery)
// ------------------------------------------------------------------

CheckReport suite_monotone(const QuadratureConfig& cfg) {
  Worst w;
  std::vector<double> grid;
  for (int i = 0; i < 30; ++i) grid.push_back(0.1 + (5.0 - 0.1) * i / 29.0);
  for (double t : {0.1, 1.0, 10.0})
    for (double kk : {0.0, 0.5, -0.5, 1.0, -1.0, 2.4, -2.4}) {
      const CheckReport r = check_monotone_r(t, Weight(kk), grid, cfg);
      // r.worst_residual <= 0 on success: margin minus gap.
      w.add(r.passed ? 0.0 : 2.0, fmt("monotone t=%g k=%g", t, kk));
    }
  // Integrand inequality on 1000 quasi-random samples (Halton 2,3,5,7).
  long violations = 0;
  for (unsigned long long i = 1; i <= 1000; ++i) {
    const double t = 0.05 + 19.95 * radical_inverse(i, 2);
    const double r = 5.0 * std::max(radical_inverse(i, 3), 1e-9);
    const double u = r + 10.0 * std::max(radical_inverse(i, 5), 1e-9);
    const double kk = -3.0 + 6.0 * radical_inverse(i, 7);
    const CheckReport c =
        check_integrand_inequality(t, r, Weight(kk), {u});
    if (!c.passed) ++violations;
    w.add(c.passed ? 0.0 : 2.0,
          fmt("ineq t=%.3f r=%.3f u=%.3f k=%.2f", t, r, u, kk));
  }
  // The coth bound (1/u - u/2t - coth u) <= -u/2t used by the proof.
  for (double u : {0.01, 0.5, 2.0, 10.0})
    for (double t : {0.1, 1.0, 10.0}) {
      const double lhs = 1.0 / u - u / (2.0 * t) - 1.0 / std::tanh(u);
      w.add(lhs <= -u / (2.0 * t) ? 0.0 : 2.0, fmt("coth u=%g t=%g", u, t));
    }
  CheckReport rep = finish("monotone", w);
  rep.worst_case_input += fmt(" [halton-offset=1 violations=%ld]", violations);
  return rep;
}

// ------------------------------------------------------------------
// asymptotics suite
// ------------------------------------------------------------------

CheckReport suite_asymptotics(const QuadratureConfig& cfg) {
  Worst w;
  std::vector<double> tg;
  for (int i = 0; i < 7; ++i) tg.push_back(std::pow(10.0, -1.0 - 0.5 * i));
  const std::vector<double> tl = {10.0, 20.0, 50.0, 100.0, 200.0};
  for (double r : {0.5, 1.0, 2.0})
    for (double kk : {0.0, 0.25, 1.0, 2.0}) {
      const AsymptoticReport s = check_small_t(r, kk, tg, cfg);
      w.add(s.verdict ? 0.0 : 2.0, fmt("small-t r=%g k=%g", r, kk));
      const AsymptoticReport l = check_large_t(r, kk, tl, cfg);
      w.add(l.verdict ? 0.0 : 2.0,
            fmt("large-t r=%g k=%g ratio_max=%.3g", r, kk, l.ratio_max));
    }
  return finish("asymptotics", w);
}

// ------------------------------------------------------------------
// tails suite
// ------------------------------------------------------------------

CheckReport suite_tails(const QuadratureConfig& cfg) {
  Worst w;
  // Closed-form Gaussian tail vs brute force and vs exact spot values.
  w.add(std::fabs(gaussian_tail_closed_form(1.0, 0.0, 0.0) - 0.5) / 1e-13,
        "gauss a=1 b=0 U=0");
  w.add(std::fabs(gaussian_tail_closed_form(0.25, 0.0, 0.0) - 2.0) / 1e-13,
        "gauss a=1/4 b=0 U=0");
  const double gconf[][3] = {{0.25, 1.5, 3.0}, {1.0, -0.5, 2.0},
                             {0.5, 2.0, 1.0},  {2.0, -3.0, 0.5},
                             {0.1, 0.0, 4.0}};
  for (auto& g : gconf) {
    const double a = g[0], b = g[1], U = g[2];
    const double upper = std::max(U, b / a) + 80.0 / std::sqrt(a);
    const auto f = [a, b](double u) {
      return u * std::exp(-a * u * u + b * u);
    };
    const double brute = simpson(f, U, upper, 200000);
    const double cf = gaussian_tail_closed_form(a, b, U);
    w.add(std::fabs(cf - brute) / (1e-10 * cf),
          fmt("gauss a=%g b=%g U=%g", a, b, U));
  }
  // Monotone in U, increasing in b.
  for (double U : {1.0, 2.0, 4.0})
    w.add(gaussian_tail_closed_form(0.5, 0.7, U + 0.5) <
                  gaussian_tail_closed_form(0.5, 0.7, U)
              ? 0.0
              : 2.0,
          fmt("gauss-decreasing U=%g", U));
  for (double b : {-1.0, 0.0, 1.0})
    w.add(gaussian_tail_closed_form(0.5, b + 0.25, 1.0) >
                  gaussian_tail_closed_form(0.5, b, 1.0)
              ? 0.0
              : 2.0,
          fmt("gauss-increasing b=%g", b));
  // tail_bound dominates brute-force tails.
  const double tconf[][4] = {{1.0, 1.0, 2.0, 10.0}, {1.0, 0.1, 2.0, 6.0},
                             {0.5, 1.0, 0.0, 4.0},  {2.0, 5.0, 1.0, 12.0},
                             {0.1, 0.5, -1.5, 3.0}};
  for (auto& c : tconf) {
    const double r = c[0], t = c[1], kk = c[2], U = c[3];
    const auto f = [&](double u) {
      // Brute tail of the raw (unscaled) u-integrand.
      return raw_integrand(u, r, t, Weight(kk)) *
             std::exp(-r * r / (4.0 * t));
    };
    const double brute = simpson(f, U, U + 60.0, 120000);
    const double bound = tail_bound(r, t, Weight(kk), U);
    w.add(brute / bound, fmt("tail-dom r=%g t=%g k=%g U=%g", r, t, kk, U));
  }
  // D_{-2}: defining-integral oracle, value at 0, corrected asymptotic.
  for (double z : {-3.0, -1.0, 0.0, 1.0, 3.0}) {
    const auto f = [z](double x) {
      return x * std::exp(-0.5 * x * x - z * x);
    };
    const double brute = std::exp(-0.25 * z * z) * simpson(f, 0.0, 50.0, 400000);
    const double cf = parabolic_cylinder_d_minus2(z);
    w.add(std::fabs(cf - brute) / (1e-8 * std::fabs(cf)),
          fmt("D-2 oracle z=%g", z));
  }
  w.add(std::fabs(parabolic_cylinder_d_minus2(0.0) - 1.0) / 1e-13, "D-2(0)");
  {
    const double ytol[][2] = {{5.0, 0.10}, {8.0, 0.02}, {12.0, 0.005}};
    for (auto& yt : ytol) {
      const double y = yt[0];
      const double lead =
          std::sqrt(2.0 * M_PI) * y * std::exp(0.25 * y * y);
      const double ratio = parabolic_cylinder_d_minus2(-y) / lead;
      w.add(std::fabs(ratio - 1.0) / yt[1], fmt("D-2 asym y=%g", y));
    }
  }
  // I2 estimate chain: brute I2 <= 2^{2|k|+2} (2/sqrt(c)) e^{r^2/4t}
  //   * 2t e^{t b^2/2} D_{-2}(-b sqrt(2t)), b = |k|-1/2 > 0.
  double fitted = 0.0;
  const double iconf[][3] = {{2.0, 1.0, 1.0},  {5.0, 1.0, 2.0},
                             {10.0, 0.5, 1.5}, {3.0, 2.0, 2.5}};
  for (auto& c : iconf) {
    const double t = c[0], r = c[1], kk = c[2];
    const double b = std::fabs(kk) - 0.5;
    const auto f = [&](double u) { return raw_integrand(u, r, t, Weight(kk)); };
    const double upper = r + 1.0 + 4.0 * t * std::max(b, 0.5) + 40.0;
    const double brute = simpson(f, r + 1.0, upper, 200000);
    const double cc = 1.0 - (1.0 + 2.0 * std::cosh(r)) * std::exp(-(r + 1.0));
    const double rhs =
        std::exp((2.0 * std::fabs(kk) + 2.0) * M_LN2) * (2.0 / std::sqrt(cc)) *
        std::exp(r * r / (4.0 * t)) * 2.0 * t * std::exp(0.5 * t * b * b) *
        parabolic_cylinder_d_minus2(-b * std::sqrt(2.0 * t));
    fitted = std::max(fitted, brute / rhs);
    w.add(brute / rhs, fmt("I2-chain t=%g r=%g k=%g", t, r, kk));
  }
  // I1 is bounded by its t-free majorant uniformly in t.
  const std::vector<double> tg = {0.01, 0.1, 1.0, 10.0};
  const double i1conf[][2] = {{1.0, 0.0}, {0.3, 2.2}, {1.0, 2.2}};
  for (auto& c : i1conf) {
    const CheckReport r = check_i1_boundedness(tg, c[0], Weight(c[1]), cfg);
    w.add(r.worst_residual, fmt("I1 r=%g k=%g", c[0], c[1]));
  }
  CheckReport rep = finish("tails", w);
  rep.worst_case_input += fmt(" [I2-fitted-ratio=%.3g]", fitted);
  return rep;
}

}  // namespace

// ------------------------------------------------------------------
// public check operations
// ------------------------------------------------------------------

CheckReport check_monotone_r(double t, Weight k,
                             const std::vector<double>& r_grid,
                             const QuadratureConfig& cfg) {
  if (r_grid.size() < 3)
    throw DomainError("check_monotone_r: grid needs >= 3 points");
  for (size_t i = 0; i + 1 < r_grid.size(); ++i)
    if (!(r_grid[i] > 0.0) || !(r_grid[i + 1] > r_grid[i]))
      throw DomainError("check_monotone_r: grid must be ascending positive");
  CheckReport rep;
  rep.suite = "monotone-r";
  rep.worst_residual = -std::numeric_limits<double>::infinity();
  std::vector<EvalReport> vals;
  vals.reserve(r_grid.size());
  for (double r : r_grid)
    vals.push_back(eval_kernel(KernelQuery(t, r, k), cfg));
  double min_gap = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (size_t i = 0; i + 1 < vals.size(); ++i) {
    const double gap = vals[i].value - vals[i + 1].value;
    const double margin = vals[i].error_estimate + vals[i].tail_bound +
                          vals[i + 1].error_estimate + vals[i + 1].tail_bound;
    min_gap = std::min(min_gap, gap);
    // residual = margin - gap; strictly negative when the ordering is
    // certified beyond quadrature error.
    const double res = margin - gap;
    if (res > rep.worst_residual) {
      rep.worst_residual = res;
      rep.worst_case_input =
          fmt("t=%g k=%g r=[%g,%g] min_gap=%.3g", t, k.k, r_grid[i],
              r_grid[i + 1], min_gap);
    }
    if (!(gap > margin)) ok = false;
    ++rep.cases_run;
  }
  rep.passed = ok;
  return rep;
}

CheckReport check_integrand_inequality(double t, double r, Weight k,
                                       const std::vector<double>& u_samples) {
  if (!(t > 0.0) || !(r > 0.0))
    throw DomainError("check_integrand_inequality: requires t > 0, r > 0");
  CheckReport rep;
  rep.suite = "integrand-inequality";
  rep.worst_residual = -std::numeric_limits<double>::infinity();
  bool ok = true;
  for (double u : u_samples) {
    if (!(u > r))
      throw DomainError("check_integrand_inequality: samples must have u > r");
    const double x = std::cosh(0.5 * u) / std::cosh(0.5 * r);
    // The common positive factor e^{-u^2/4t} is clamped at e^{-700} so the
    // strict sign assertions survive where the true factor underflows.
    const double e = std::exp(std::max(-u * u / (4.0 * t), -700.0));
    const double fk = (u * e / std::sinh(u)) * t2k(x, k);
    const double term1 =
        std::sinh(r) * (1.0 / u - u / (2.0 * t) - 1.0 / std::tanh(u)) * fk;
    const double tp = t2k_prime(x, k);
    const double ch2r = std::cosh(0.5 * r) * std::cosh(0.5 * r);
    const double ch2u = std::cosh(0.5 * u) * std::cosh(0.5 * u);
    const double term2 = tp * (u * e * std::sinh(0.5 * r)) /
                         (2.0 * std::cosh(0.5 * u) * ch2r) * (ch2r - ch2u);
    const bool good = term1 < 0.0 &&
                      (k.k == 0.0 ? term2 == 0.0 : term2 < 0.0) &&
                      term1 + term2 < 0.0;
    const double res = std::max(term1, std::max(term2, term1 + term2));
    if (res > rep.worst_residual) {
      rep.worst_residual = res;
      rep.worst_case_input = fmt("t=%g r=%g u=%g k=%g", t, r, u, k.k);
    }
    if (!good) ok = false;
    ++rep.cases_run;
  }
  rep.passed = ok;
  return rep;
}

CheckReport check_i1_boundedness(const std::vector<double>& t_grid, double r,
                                 Weight k, const QuadratureConfig& cfg) {
  if (!(r > 0.0)) throw DomainError("check_i1_boundedness: requires r > 0");
  cfg.validate();
  CheckReport rep;
  rep.suite = "i1-boundedness";
  const double chr = std::cosh(r);
  const double ch = std::cosh(0.5 * r);
  // Majorant (2/sqrt(2(cosh^2(r/2)-1))) int_1^a arcosh(x cosh(r/2))
  //   / sqrt(x-1) T_{2k}(x) dx, regularized by x = 1 + v^2.
  const double a_lim = std::cosh(0.5 * (r + 1.0)) / ch;
  const auto maj_f = [&](double v) {
    const double x = 1.0 + v * v;
    return 2.0 * std::acosh(x * ch) * t2k(x, k);
  };
  const QuadResult mq = integrate(maj_f, 0.0, std::sqrt(a_lim - 1.0),
                                  cfg.rel_tol, 0.0, cfg.max_subdivisions);
  const double majorant = 2.0 / std::sqrt(2.0 * (ch * ch - 1.0)) * mq.value;
  bool ok = true;
  for (double t : t_grid) {
    // I1 via the same endpoint substitution as the kernel engine.
    const auto f = [&](double s) {
      const double w0 = (chr - 1.0) + s * s;
      const double u = std::log1p(w0 + std::sqrt(w0 * (w0 + 2.0)));
      const double sinh_u = std::sqrt(w0 * (w0 + 2.0));
      const double q = s * s / (chr + 1.0);
      const double d = q / (1.0 + std::sqrt(1.0 + q));
      return M_SQRT2 * (u / sinh_u) *
             std::exp(-(u - r) * (u + r) / (4.0 * t)) * t2k_shifted(d, k);
    };
    const double s_cut = std::sqrt(std::cosh(r + 1.0) - chr);
    const QuadResult iq =
        integrate(f, 0.0, s_cut, cfg.rel_tol, 0.0, cfg.max_subdivisions);
    const double ratio = iq.value / majorant;
    if (ratio > rep.worst_residual) {
      rep.worst_residual = ratio;
      rep.worst_case_input =
          fmt("t=%g r=%g k=%g I1=%.4g maj=%.4g", t, r, k.k, iq.value, majorant);
    }
    if (!(iq.value <= majorant)) ok = false;
    ++rep.cases_run;
  }
  rep.passed = ok;
  return rep;
}

std::vector<CheckReport> run_suites(const std::string& name,
                                    const QuadratureConfig& cfg) {
  cfg.validate();
  std::vector<CheckReport> out;
  const bool all = name == "all";
  bool known = all;
  if (all || name == "tcheb") out.push_back(suite_tcheb()), known = true;
  if (all || name == "bracket") out.push_back(suite_bracket()), known = true;
  if (all || name == "kernel") out.push_back(suite_kernel(cfg)), known = true;
  if (all || name == "monotone")
    out.push_back(suite_monotone(cfg)), known = true;
  if (all || name == "asymptotics")
    out.push_back(suite_asymptotics(cfg)), known = true;
  if (all || name == "tails") out.push_back(suite_tails(cfg)), known = true;
  if (!known) throw std::invalid_argument("unknown suite: " + name);
  return out;
}

std::vector<CheckReport> run_all(const QuadratureConfig& cfg) {
  return run_suites("all", cfg);
}

}  // namespace hk
