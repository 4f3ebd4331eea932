#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace charwave {

using RealFn = std::function<double(double)>;

// Adaptive Gauss–Kronrod (7,15) quadrature of f over [a,b] to absolute
// tolerance tol (plus a matching relative term). Throws QuadratureError if the
// subdivision budget is exhausted before the error estimate falls below tol.
double integrate(const RealFn& f, double a, double b, double tol = 1e-12);

// Strictly monotone cumulative map M(x) = M(x0) + \int_{x0}^{x} g(s) ds for an
// integrand bounded below by g_min > 0. Panels are refined adaptively at
// construction so that evaluation anywhere in [a,b] meets the tolerance.
class CumulativeMap {
 public:
  // Requires a < b, x0 in [a,b]; g must be positive on [a,b].
  CumulativeMap(RealFn g, double a, double b, double x0, double tol = 1e-12);

  double operator()(double x) const;  // M(x), clamped domain
  double inverse(double value) const; // unique x with M(x) = value (bisection)
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  RealFn g_;
  double a_, b_, tol_;
  std::vector<double> knots_;   // panel boundaries, ascending
  std::vector<double> prefix_;  // M at each knot
};

// Piecewise-linear interpolation on an ascending abscissa grid; clamps outside.
double interp_linear(std::span<const double> xs, std::span<const double> ys, double x);

// Index of the first ascending-grid element >= x (clamped to [0, size]).
std::size_t lower_index(std::span<const double> xs, double x);

// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

// (cos^2)^e with the continuous extension at cos = 0: returns 1 for e == 0 and
// c2 for e == 1 exactly; c2 must be >= 0.
double cos2_pow(double c2, double e);

// Least-squares slope of log(err) against log(h); requires all inputs > 0 and
// at least two points.
double loglog_slope(std::span<const double> hs, std::span<const double> errs);

// Trapezoid cumulative sum: out[0] = base; out[k] = base + sum of
// h/2*(f[k-1]+f[k]). in and out may alias only if in is not reused.
void cumulative_trapezoid(std::span<const double> f, double h, double base,
                          std::span<double> out);

}  // namespace charwave
