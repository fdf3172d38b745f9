#include "hk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "hk/errors.hpp"

namespace hk {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || rel_tol > 1e-2)
    throw DomainError("rel_tol must lie in (0, 1e-2]");
  if (!(abs_tol >= 0.0)) throw DomainError("abs_tol must be >= 0");
  if (max_subdivisions < 1 || max_subdivisions > 1000000)
    throw DomainError("max_subdivisions must lie in [1, 1e6]");
  if (!(tail_rel_tol > 0.0)) throw DomainError("tail_rel_tol must be > 0");
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  double res_abs = std::fabs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double f1 = f(c - x);
    const double f2 = f(c + x);
    res_k += kWgk[j] * (f1 + f2);
    res_abs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) res_g += kWg[j / 2] * (f1 + f2);
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.value = res_k * h;
  const double diff = std::fabs(res_k - res_g) * h;
  // QUADPACK-style sharpened estimate, floored at roundoff level.
  double err = diff;
  const double scale = res_abs * h;
  if (scale > 0.0 && diff > 0.0)
    err = scale * std::min(1.0, std::pow(200.0 * diff / scale, 1.5));
  err = std::max(err, 50.0 * 2.220446049250313e-16 * scale);
  s.error = err;
  return s;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double rel_tol, double abs_tol,
                     int max_subdivisions) {
  QuadResult out;
  if (a == b) return out;
  std::priority_queue<Segment> heap;
  Segment s0 = gk15(f, a, b);
  out.evaluations = 15;
  double total_value = s0.value;
  double total_error = s0.error;
  heap.push(s0);
  int nseg = 1;
  while (total_error >
             std::max(rel_tol * std::fabs(total_value), abs_tol) &&
         nseg < max_subdivisions) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval no longer splittable at double precision.
      heap.push(worst);
      break;
    }
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++nseg;
  }
  if (total_error > std::max(rel_tol * std::fabs(total_value), abs_tol))
    throw QuadratureError("adaptive quadrature did not converge",
                          total_error);
  out.value = total_value;
  out.error = total_error;
  return out;
}

}  // namespace hk
