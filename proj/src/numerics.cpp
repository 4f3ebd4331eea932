#include "charwave/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "charwave/errors.hpp"

namespace charwave {
namespace {

// Gauss–Kronrod (7,15) nodes/weights on [-1,1]; the embedded 7-point Gauss rule
// uses the odd-indexed Kronrod nodes.
constexpr double kKronrodNodes[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
constexpr double kKronrodWeights[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
constexpr double kGaussWeights[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct PanelResult {
  double value;
  double error;
};

PanelResult gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double kron = 0.0, gauss = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double fx = f(c + h * kKronrodNodes[i]);
    kron += kKronrodWeights[i] * fx;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fx;
  }
  kron *= h;
  gauss *= h;
  // Standard conservative error model for the embedded pair.
  const double diff = std::abs(kron - gauss);
  return {kron, std::pow(200.0 * diff, 1.5)};
}

}  // namespace

double integrate(const RealFn& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double sign = a < b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);

  struct Interval {
    double a, b, value, error;
  };
  auto start = gk15(f, a, b);
  std::deque<Interval> work{{a, b, start.value, start.error}};
  double total = start.value, total_err = start.error;
  const int kMaxPanels = 4000;
  int panels = 1;
  while (total_err > tol + 1e-14 * std::abs(total)) {
    if (panels >= kMaxPanels) throw QuadratureError("quadrature failed to converge");
    auto worst = std::max_element(work.begin(), work.end(), [](auto& l, auto& r) {
      return l.error < r.error;
    });
    Interval iv = *worst;
    work.erase(worst);
    const double mid = 0.5 * (iv.a + iv.b);
    auto left = gk15(f, iv.a, mid);
    auto right = gk15(f, mid, iv.b);
    total += left.value + right.value - iv.value;
    total_err += left.error + right.error - iv.error;
    work.push_back({iv.a, mid, left.value, left.error});
    work.push_back({mid, iv.b, right.value, right.error});
    ++panels;
  }
  return sign * total;
}

CumulativeMap::CumulativeMap(RealFn g, double a, double b, double x0, double tol)
    : g_(std::move(g)), a_(a), b_(b), tol_(tol) {
  if (!(a < b) || x0 < a || x0 > b)
    throw InvariantError("cumulative map requires a < b and x0 inside [a,b]");
  // Refine panels until each panel's GK error estimate is below a share of tol.
  std::vector<double> ks{a, b};
  bool again = true;
  int guard = 0;
  while (again) {
    if (++guard > 40) throw QuadratureError("cumulative map refinement stalled");
    again = false;
    std::vector<double> next;
    next.reserve(ks.size() * 2);
    const double per_panel = tol_ / static_cast<double>(ks.size());
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
      next.push_back(ks[i]);
      auto r = gk15(g_, ks[i], ks[i + 1]);
      if (r.error > per_panel && ks[i + 1] - ks[i] > 1e-10 * (b - a)) {
        next.push_back(0.5 * (ks[i] + ks[i + 1]));
        again = true;
      }
    }
    next.push_back(b);
    ks = std::move(next);
    if (ks.size() > 100000) throw QuadratureError("cumulative map refinement exploded");
  }
  knots_ = std::move(ks);
  prefix_.assign(knots_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
    prefix_[i + 1] = prefix_[i] + gk15(g_, knots_[i], knots_[i + 1]).value;
  // Shift so that M(x0) = 0.
  const double at_x0 = (*this)(x0);
  for (double& v : prefix_) v -= at_x0;
}

double CumulativeMap::operator()(double x) const {
  x = std::clamp(x, a_, b_);
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(
      0, std::distance(knots_.begin(), it) - 1));
  if (i + 1 >= knots_.size()) i = knots_.size() - 2;
  return prefix_[i] + gk15(g_, knots_[i], x).value;
}

double CumulativeMap::inverse(double value) const {
  double lo = a_, hi = b_;
  double flo = (*this)(lo) - value, fhi = (*this)(hi) - value;
  if (flo > 0.0) return lo;
  if (fhi < 0.0) return hi;
  const double xtol = 1e-13 * std::max(1.0, std::abs(b_ - a_));
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = (*this)(mid) - value;
    if (fm < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double interp_linear(std::span<const double> xs, std::span<const double> ys, double x) {
  if (xs.empty()) throw InvariantError("interpolation on empty grid");
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t i = static_cast<std::size_t>(std::distance(xs.begin(), it)) - 1;
  const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
  return ys[i] + t * (ys[i + 1] - ys[i]);
}

std::size_t lower_index(std::span<const double> xs, double x) {
  return static_cast<std::size_t>(
      std::distance(xs.begin(), std::lower_bound(xs.begin(), xs.end(), x)));
}

double wrap_angle(double a) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double w = std::remainder(a, kTwoPi);
  if (w <= -3.14159265358979323846) w += kTwoPi;
  return w;
}

double cos2_pow(double c2, double e) {
  if (e == 0.0) return 1.0;
  if (e == 1.0) return c2;
  if (c2 <= 0.0) return 0.0;
  return std::pow(c2, e);
}

double loglog_slope(std::span<const double> hs, std::span<const double> errs) {
  if (hs.size() != errs.size() || hs.size() < 2)
    throw InvariantError("slope estimation needs matching arrays with >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!(hs[i] > 0.0) || !(errs[i] > 0.0))
      throw InvariantError("slope estimation requires positive h and error values");
    const double x = std::log(hs[i]), y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void cumulative_trapezoid(std::span<const double> f, double h, double base,
                          std::span<double> out) {
  if (f.size() != out.size() || f.empty())
    throw InvariantError("cumulative trapezoid size mismatch");
  out[0] = base;
  for (std::size_t k = 1; k < f.size(); ++k)
    out[k] = out[k - 1] + 0.5 * h * (f[k - 1] + f[k]);
}

}  // namespace charwave
