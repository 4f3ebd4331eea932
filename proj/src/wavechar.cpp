#include "charwave/wavechar.hpp"

#include <algorithm>
#include <cmath>

#include "charwave/errors.hpp"

namespace charwave {
namespace {

double weight2(double kappa, double X, double Y) {
  return std::exp(-kappa * (std::abs(X) + std::abs(Y)));
}

InitialCurve::Point lerp_point(const InitialCurve& c, std::size_t k, double s) {
  auto mix = [s](double a, double b) { return a + s * (b - a); };
  InitialCurve::Point p;
  p.x = mix(c.x[k], c.x[k + 1]);
  p.X = mix(c.X[k], c.X[k + 1]);
  p.Y = mix(c.Y[k], c.Y[k + 1]);
  p.u = mix(c.u[k], c.u[k + 1]);
  p.w = mix(c.w[k], c.w[k + 1]);
  p.v = mix(c.v[k], c.v[k + 1]);
  return p;
}

}  // namespace

InitialCurve::Point InitialCurve::at_X(double Xq) const {
  const std::size_t m = X.size();
  if (Xq <= X.front()) return lerp_point(*this, 0, 0.0);
  if (Xq >= X.back()) return lerp_point(*this, m - 2, 1.0);
  // monotone bisection on the ascending stored X samples
  std::size_t lo = 0, hi = m - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (X[mid] <= Xq ? lo : hi) = mid;
  }
  const double s = (Xq - X[lo]) / (X[lo + 1] - X[lo]);
  return lerp_point(*this, lo, s);
}

InitialCurve::Point InitialCurve::at_Y(double Yq) const {
  const std::size_t m = Y.size();
  if (Yq >= Y.front()) return lerp_point(*this, 0, 0.0);
  if (Yq <= Y.back()) return lerp_point(*this, m - 2, 1.0);
  // monotone bisection on the descending stored Y samples
  std::size_t lo = 0, hi = m - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (Y[mid] >= Yq ? lo : hi) = mid;
  }
  const double s = (Yq - Y[lo]) / (Y[lo + 1] - Y[lo]);
  return lerp_point(*this, lo, s);
}

InitialCurve build_initial_curve(const ModelSpec2& spec, double xmin, double xmax, int n) {
  if (!(xmin < 0.0 && 0.0 < xmax)) throw InvariantError("curve range must straddle x = 0");
  if (n < 2) throw InvariantError("curve needs at least 2 samples");
  const double ex = spec.lambda.stretch_exponent();
  auto gX = [&spec, ex](double x) {
    const RiemannData rd = riemann_data(spec, x);
    return std::pow(1.0 + rd.R0 * rd.R0, ex);
  };
  auto gN = [&spec, ex](double x) {
    const RiemannData rd = riemann_data(spec, x);
    return std::pow(1.0 + rd.S0 * rd.S0, ex);
  };
  CumulativeMap Xmap(gX, xmin, xmax, 0.0);
  CumulativeMap Nmap(gN, xmin, xmax, 0.0);  // Y = -N

  InitialCurve c;
  c.x.resize(n);
  c.X.resize(n);
  c.Y.resize(n);
  c.u.resize(n);
  c.w.resize(n);
  c.v.resize(n);
  const double h = (xmax - xmin) / (n - 1);
  for (int k = 0; k < n; ++k) {
    const double x = (k == n - 1) ? xmax : xmin + h * k;
    const RiemannData rd = riemann_data(spec, x);
    c.x[k] = x;
    c.X[k] = Xmap(x);
    c.Y[k] = -Nmap(x);
    c.u[k] = spec.data.u0(x);
    c.w[k] = 2.0 * std::atan(rd.R0);
    c.v[k] = 2.0 * std::atan(rd.S0);
  }
  for (int k = 1; k < n; ++k)
    if (!(c.X[k] > c.X[k - 1]) || !(c.Y[k] < c.Y[k - 1]))
      throw InvariantError("initial curve is not strictly monotone");
  return c;
}

Grid2 make_grid2(const ModelSpec2& spec, const InitialCurve& curve, int n) {
  if (n < 16) throw InvariantError("grid needs at least 16 nodes per axis");
  const double r = spec.r;
  if (!(curve.Y.front() >= r && curve.X.back() >= r))
    throw InvariantError("initial curve does not span the truncated domain");

  Grid2 g;
  g.n = n;
  g.r = r;
  const double X_lo = curve.phi_inv(r);  // leftmost X needed (curve hits Y = r)
  const double Y_lo = curve.phi(r);      // lowest Y needed (curve hits X = r)
  g.hX = (r - X_lo) / (n - 1);
  g.hY = (r - Y_lo) / (n - 1);
  g.X.resize(n);
  g.Y.resize(n);
  for (int k = 0; k < n; ++k) {
    g.X[k] = X_lo + g.hX * k;
    g.Y[k] = Y_lo + g.hY * k;
  }
  g.X.back() = r;
  g.Y.back() = r;

  const double tol = 1e-12 * (1.0 + r);
  g.mask.assign(static_cast<std::size_t>(n) * n, 0);
  g.first_i.assign(n, n);
  g.col_start.resize(n);
  g.first_j.assign(n, n);
  g.row_start.resize(n);
  for (int j = 0; j < n; ++j) {
    g.col_start[j] = curve.at_Y(g.Y[j]);
    const double Xc = g.col_start[j].X;
    for (int i = 0; i < n; ++i)
      if (g.X[i] >= Xc - tol) {
        g.first_i[j] = i;
        break;
      }
    for (int i = g.first_i[j]; i < n; ++i) g.mask[static_cast<std::size_t>(i) * n + j] = 1;
  }
  for (int i = 0; i < n; ++i) {
    g.row_start[i] = curve.at_X(g.X[i]);
    for (int j = 0; j < n; ++j)
      if (g.inside(i, j)) {
        g.first_j[i] = j;
        break;
      }
    // backward paths stay inside the mask: rows must be contiguous
    for (int j = g.first_j[i]; j < n; ++j)
      if (!g.inside(i, j))
        throw InvariantError("grid mask is not line-contiguous; curve not monotone?");
  }
  return g;
}

Rhs2 rhs_wave(double u, double w, double v, double p, double q, const ModelSpec2& spec) {
  const double lam = spec.lambda.value;
  const double e = spec.lambda.rhs_exponent();
  const double c = spec.speed.c(u);
  const double dc = spec.speed.dc(u);
  const double sw = std::sin(w), sv = std::sin(v);
  const double s2w = std::sin(0.5 * w), c2w = std::cos(0.5 * w);
  const double s2v = std::sin(0.5 * v), c2v = std::cos(0.5 * v);
  const double Cw = c2w * c2w, Cv = c2v * c2v;
  const double sigw = s2w * s2w, sigv = s2v * s2v;
  const double Cwe = cos2_pow(Cw, e), Cve = cos2_pow(Cv, e);
  const double c2inv = dc / (c * c);

  Rhs2 r;
  // u_X = (u_t + c u_x)/(2c X_x) and u_Y = (u_t - c u_x)/(-2c Y_x): expanding
  // through p = (1+R^2)^{1/(2lambda)}/X_x, q = (1+S^2)^{1/(2lambda)}/(-Y_x)
  // leaves a 1/(2c) factor on both (it cancels nowhere).
  r.u_X = 0.25 * sw * Cwe * p / c;
  r.u_Y = 0.25 * sv * Cve * q / c;
  const double brw = lam * sigw * Cv + (lam - 1.0) * sigv * Cw - 0.25 * (2.0 * lam - 1.0) * sw * sv;
  const double brv = lam * sigv * Cw + (lam - 1.0) * sigw * Cv - 0.25 * (2.0 * lam - 1.0) * sw * sv;
  r.w_Y = 0.5 * c2inv * q * Cve * brw;
  r.v_X = 0.5 * c2inv * p * Cwe * brv;
  const double brp =
      ((lam - 1.0) / lam) * (sw * sigv - sv * sigw) - sw * Cv + sv * Cw;
  r.p_Y = 0.125 * c2inv * p * q * Cve * brp;
  r.q_X = -0.125 * c2inv * p * q * Cwe * brp;
  return r;
}

double default_kappa2(const ModelSpec2& spec) {
  const ValidationReport rep = validate_model2(spec);
  const double lam = spec.lambda.value;
  const double growth = std::max(1.0, (1.0 - lam) / lam);
  return 2.0 * (rep.c_max / (rep.c_min * rep.c_min)) * rep.dc_sup * spec.r * growth;
}

std::string wave_regime_label(const LambdaParam& lambda) {
  if (lambda.value > 0.0 && lambda.value <= 1.0 / 3.0 + 1e-15)
    return regime_name(lambda.regime);
  return regime_name(Regime::Unsupported);
}

SolveResult2 picard_solve(const ModelSpec2& spec, const Grid2& grid, const SolveOptions& opts) {
  const int n = grid.n;
  const auto N = static_cast<std::size_t>(n);
  const double kappa = opts.kappa.value_or(default_kappa2(spec));

  // Seeds: curve data extended constant along each field's integration
  // direction; p = q = 1 everywhere.
  State2 st;
  st.u = Field(N, N);
  st.w = Field(N, N);
  st.v = Field(N, N);
  st.p = Field(N, N, 1.0);
  st.q = Field(N, N, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      st.u.at(i, j) = grid.col_start[j].u;
      st.v.at(i, j) = grid.col_start[j].v;
      st.w.at(i, j) = grid.row_start[i].w;
    }

  Field nu(N, N), nw(N, N), nv(N, N), np(N, N, 1.0), nq(N, N, 1.0);
  Field fuX(N, N), fvX(N, N), fqX(N, N), fwY(N, N), fpY(N, N);

  ConvergenceHistory2 hist;
  hist.kappa = kappa;
  double prev_plain = 0.0;

  struct LinePartial {
    double weighted = 0.0, plain = 0.0;
    double p_min = 1e300, p_max = -1e300, q_min = 1e300, q_max = -1e300;
    int p_loss_j = -1, q_loss_j = -1;
    double p_loss_val = 0.0, q_loss_val = 0.0;
  };

  for (int it = 1; it <= opts.max_iter; ++it) {
    for_each_index(opts.exec, n, [&](std::ptrdiff_t i) {
      for (int j = 0; j < n; ++j) {
        if (!grid.inside(i, j)) continue;
        const Rhs2 r = rhs_wave(st.u.at(i, j), st.w.at(i, j), st.v.at(i, j), st.p.at(i, j),
                                st.q.at(i, j), spec);
        fuX.at(i, j) = r.u_X;
        fvX.at(i, j) = r.v_X;
        fqX.at(i, j) = r.q_X;
        fwY.at(i, j) = r.w_Y;
        fpY.at(i, j) = r.p_Y;
      }
    });

    // u, v, q: along X at fixed Y, from the curve point (phi^-1(Y), Y) where
    // the data are exact and p = q = 1.
    for_each_index(opts.exec, n, [&](std::ptrdiff_t j) {
      const int i0 = grid.first_i[j];
      if (i0 >= n) return;
      const InitialCurve::Point& P = grid.col_start[j];
      const Rhs2 r0 = rhs_wave(P.u, P.w, P.v, 1.0, 1.0, spec);
      const double d0 = std::max(0.0, grid.X[i0] - P.X);
      nu.at(i0, j) = P.u + 0.5 * d0 * (r0.u_X + fuX.at(i0, j));
      nv.at(i0, j) = P.v + 0.5 * d0 * (r0.v_X + fvX.at(i0, j));
      nq.at(i0, j) = 1.0 + 0.5 * d0 * (r0.q_X + fqX.at(i0, j));
      for (int i = i0 + 1; i < n; ++i) {
        nu.at(i, j) = nu.at(i - 1, j) + 0.5 * grid.hX * (fuX.at(i - 1, j) + fuX.at(i, j));
        nv.at(i, j) = nv.at(i - 1, j) + 0.5 * grid.hX * (fvX.at(i - 1, j) + fvX.at(i, j));
        nq.at(i, j) = nq.at(i - 1, j) + 0.5 * grid.hX * (fqX.at(i - 1, j) + fqX.at(i, j));
      }
    });

    // w, p: along Y at fixed X, from the curve point (X, phi(X)).
    for_each_index(opts.exec, n, [&](std::ptrdiff_t i) {
      const int j0 = grid.first_j[i];
      if (j0 >= n) return;
      const InitialCurve::Point& P = grid.row_start[i];
      const Rhs2 r0 = rhs_wave(P.u, P.w, P.v, 1.0, 1.0, spec);
      const double d0 = std::max(0.0, grid.Y[j0] - P.Y);
      nw.at(i, j0) = P.w + 0.5 * d0 * (r0.w_Y + fwY.at(i, j0));
      np.at(i, j0) = 1.0 + 0.5 * d0 * (r0.p_Y + fpY.at(i, j0));
      for (int j = j0 + 1; j < n; ++j) {
        nw.at(i, j) = nw.at(i, j - 1) + 0.5 * grid.hY * (fwY.at(i, j - 1) + fwY.at(i, j));
        np.at(i, j) = np.at(i, j - 1) + 0.5 * grid.hY * (fpY.at(i, j - 1) + fpY.at(i, j));
      }
    });

    // Per-line partials, reduced serially: bit-deterministic norms, extrema,
    // and positivity-loss bookkeeping.
    std::vector<LinePartial> part(N);
    for_each_index(opts.exec, n, [&](std::ptrdiff_t i) {
      LinePartial lp;
      for (int j = 0; j < n; ++j) {
        if (!grid.inside(i, j)) continue;
        const double d = std::max({std::abs(nu.at(i, j) - st.u.at(i, j)),
                                   std::abs(nw.at(i, j) - st.w.at(i, j)),
                                   std::abs(nv.at(i, j) - st.v.at(i, j)),
                                   std::abs(np.at(i, j) - st.p.at(i, j)),
                                   std::abs(nq.at(i, j) - st.q.at(i, j))});
        lp.plain = std::max(lp.plain, d);
        lp.weighted = std::max(lp.weighted, d * weight2(kappa, grid.X[i], grid.Y[j]));
        const double pv = np.at(i, j), qv = nq.at(i, j);
        lp.p_min = std::min(lp.p_min, pv);
        lp.p_max = std::max(lp.p_max, pv);
        lp.q_min = std::min(lp.q_min, qv);
        lp.q_max = std::max(lp.q_max, qv);
        if (pv <= 0.0 && lp.p_loss_j < 0) {
          lp.p_loss_j = j;
          lp.p_loss_val = pv;
        }
        if (qv <= 0.0 && lp.q_loss_j < 0) {
          lp.q_loss_j = j;
          lp.q_loss_val = qv;
        }
      }
      part[i] = lp;
    });
    IterationRow2 row;
    row.iter = it;
    row.p_min = 1e300;
    row.p_max = -1e300;
    row.q_min = 1e300;
    row.q_max = -1e300;
    bool p_evented = false, q_evented = false;
    for (int i = 0; i < n; ++i) {
      const LinePartial& lp = part[i];
      row.weighted = std::max(row.weighted, lp.weighted);
      row.plain = std::max(row.plain, lp.plain);
      row.p_min = std::min(row.p_min, lp.p_min);
      row.p_max = std::max(row.p_max, lp.p_max);
      row.q_min = std::min(row.q_min, lp.q_min);
      row.q_max = std::max(row.q_max, lp.q_max);
      if (lp.p_loss_j >= 0 && !p_evented) {
        p_evented = true;
        hist.positivity_events.push_back(
            {it, 'p', grid.X[i], grid.Y[lp.p_loss_j], lp.p_loss_val});
      }
      if (lp.q_loss_j >= 0 && !q_evented) {
        q_evented = true;
        hist.positivity_events.push_back(
            {it, 'q', grid.X[i], grid.Y[lp.q_loss_j], lp.q_loss_val});
      }
    }
    hist.rows.push_back(row);
    std::swap(st.u, nu);
    std::swap(st.w, nw);
    std::swap(st.v, nv);
    std::swap(st.p, np);
    std::swap(st.q, nq);
    hist.iterations = it;

    if (!std::isfinite(row.plain) || (it > 4 && row.plain > 1e8 * (1.0 + prev_plain))) {
      if (opts.throw_on_divergence)
        throw FixedPointDivergenceError("fixed-point iteration diverged at iteration " +
                                        std::to_string(it));
      return {std::move(st), std::move(hist)};
    }
    prev_plain = row.plain;
    // Conservative stop: the plain norm dominates the weighted one (weight
    // <= 1), so requiring plain < tol never stops before the weighted
    // criterion holds, and never reports an unconverged far field (large
    // kappa makes the weighted norm vacuous away from the curve).
    if (row.plain < opts.tol) {
      hist.converged = true;
      break;
    }
  }
  if (!hist.converged && opts.throw_on_divergence)
    throw FixedPointDivergenceError("fixed-point iteration did not reach tolerance within " +
                                    std::to_string(opts.max_iter) + " iterations");
  return {std::move(st), std::move(hist)};
}

double balance_residual(const ModelSpec2& spec, const Grid2& grid, const State2& state) {
  const int n = grid.n;
  const double e = spec.lambda.rhs_exponent();
  double res = 0.0;
  for (int i = 1; i + 1 < n; ++i)
    for (int j = 1; j + 1 < n; ++j) {
      if (!grid.inside(i - 1, j - 1) || !grid.inside(i - 1, j + 1) ||
          !grid.inside(i + 1, j - 1) || !grid.inside(i + 1, j + 1))
        continue;
      const double c2w = std::cos(0.5 * state.w.at(i, j));
      const double c2v = std::cos(0.5 * state.v.at(i, j));
      const double Cwe = cos2_pow(c2w * c2w, e);
      const double Cve = cos2_pow(c2v * c2v, e);
      const double pY = (state.p.at(i, j + 1) - state.p.at(i, j - 1)) / (2.0 * grid.hY);
      const double qX = (state.q.at(i + 1, j) - state.q.at(i - 1, j)) / (2.0 * grid.hX);
      res = std::max(res, std::abs(Cwe * pY + Cve * qX));
    }
  return res;
}

InverseResult2 inverse_transform2(const ModelSpec2& spec, const Grid2& grid,
                                  const State2& state, bool throw_on_mismatch) {
  const int n = grid.n;
  const auto N = static_cast<std::size_t>(n);
  const double se = spec.lambda.stretch_exponent();

  // Non-negative integrands for t; x shares them scaled by +-c.
  Field tXf(N, N), tYf(N, N), cf(N, N);
  double integrand_sup = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!grid.inside(i, j)) continue;
      const double c = spec.speed.c(state.u.at(i, j));
      const double c2w = std::cos(0.5 * state.w.at(i, j));
      const double c2v = std::cos(0.5 * state.v.at(i, j));
      const double tX = state.p.at(i, j) * cos2_pow(c2w * c2w, se) / (2.0 * c);
      const double tY = state.q.at(i, j) * cos2_pow(c2v * c2v, se) / (2.0 * c);
      tXf.at(i, j) = tX;
      tYf.at(i, j) = tY;
      cf.at(i, j) = c;
      integrand_sup = std::max({integrand_sup, tX * std::max(1.0, c), tY * std::max(1.0, c)});
    }
  auto curve_tX = [&](const InitialCurve::Point& P) {
    const double c2w = std::cos(0.5 * P.w);
    return cos2_pow(c2w * c2w, se) / (2.0 * spec.speed.c(P.u));
  };
  auto curve_tY = [&](const InitialCurve::Point& P) {
    const double c2v = std::cos(0.5 * P.v);
    return cos2_pow(c2v * c2v, se) / (2.0 * spec.speed.c(P.u));
  };

  InverseResult2 out;
  out.t = Field(N, N);
  out.x = Field(N, N);
  Field tB(N, N), xB(N, N);

  // Route A: along X from the curve (t = 0, x = curve parameter, exactly).
  for (int j = 0; j < n; ++j) {
    const int i0 = grid.first_i[j];
    if (i0 >= n) continue;
    const InitialCurve::Point& P = grid.col_start[j];
    const double d0 = std::max(0.0, grid.X[i0] - P.X);
    const double t0X = curve_tX(P);
    out.t.at(i0, j) = 0.5 * d0 * (t0X + tXf.at(i0, j));
    out.x.at(i0, j) =
        P.x + 0.5 * d0 * (spec.speed.c(P.u) * t0X + cf.at(i0, j) * tXf.at(i0, j));
    for (int i = i0 + 1; i < n; ++i) {
      out.t.at(i, j) = out.t.at(i - 1, j) + 0.5 * grid.hX * (tXf.at(i - 1, j) + tXf.at(i, j));
      out.x.at(i, j) = out.x.at(i - 1, j) + 0.5 * grid.hX * (cf.at(i - 1, j) * tXf.at(i - 1, j) +
                                                             cf.at(i, j) * tXf.at(i, j));
    }
  }
  // Route B: along Y from the curve; x integrand is -c t_Y.
  for (int i = 0; i < n; ++i) {
    const int j0 = grid.first_j[i];
    if (j0 >= n) continue;
    const InitialCurve::Point& P = grid.row_start[i];
    const double d0 = std::max(0.0, grid.Y[j0] - P.Y);
    const double t0Y = curve_tY(P);
    tB.at(i, j0) = 0.5 * d0 * (t0Y + tYf.at(i, j0));
    xB.at(i, j0) =
        P.x - 0.5 * d0 * (spec.speed.c(P.u) * t0Y + cf.at(i, j0) * tYf.at(i, j0));
    for (int j = j0 + 1; j < n; ++j) {
      tB.at(i, j) = tB.at(i, j - 1) + 0.5 * grid.hY * (tYf.at(i, j - 1) + tYf.at(i, j));
      xB.at(i, j) = xB.at(i, j - 1) - 0.5 * grid.hY * (cf.at(i, j - 1) * tYf.at(i, j - 1) +
                                                       cf.at(i, j) * tYf.at(i, j));
    }
  }
  double mismatch = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (grid.inside(i, j))
        mismatch = std::max(
            {mismatch, std::abs(out.t.at(i, j) - tB.at(i, j)),
             std::abs(out.x.at(i, j) - xB.at(i, j))});
  out.path_mismatch = mismatch;
  const double h = std::max(grid.hX, grid.hY);
  if (throw_on_mismatch && mismatch > 50.0 * h * integrand_sup * std::max(1.0, grid.r))
    throw CompatibilityError("inverse-map path mismatch " + std::to_string(mismatch) +
                             " exceeds the O(h) tolerance");

  out.samples.a_name = "X";
  out.samples.b_name = "Y";
  out.samples.rows.reserve(N * N / 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (grid.inside(i, j))
        out.samples.rows.push_back(
            {out.t.at(i, j), out.x.at(i, j), state.u.at(i, j), grid.X[i], grid.Y[j]});
  return out;
}

BlowupReport2 detect_blowup2(const Grid2& grid, const State2& state, double threshold,
                             const InverseResult2* inv) {
  const int n = grid.n;
  BlowupReport2 rep;
  rep.p_min = 1e300;
  rep.p_max = -1e300;
  rep.q_min = 1e300;
  rep.q_max = -1e300;
  int bi = -1, bj = -1;
  double best_t = 1e300;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!grid.inside(i, j)) continue;
      rep.p_min = std::min(rep.p_min, state.p.at(i, j));
      rep.p_max = std::max(rep.p_max, state.p.at(i, j));
      rep.q_min = std::min(rep.q_min, state.q.at(i, j));
      rep.q_max = std::max(rep.q_max, state.q.at(i, j));
      const double aw = std::abs(state.w.at(i, j));
      const double av = std::abs(state.v.at(i, j));
      rep.w_sup = std::max(rep.w_sup, aw);
      rep.v_sup = std::max(rep.v_sup, av);
      if (std::max(aw, av) >= threshold) {
        if (inv) {
          const double t = inv->t.at(i, j);
          if (t < best_t) {
            best_t = t;
            bi = i;
            bj = j;
          }
        } else if (bi < 0) {
          bi = i;
          bj = j;
        }
      }
    }
  if (bi >= 0) {
    rep.detected = true;
    rep.X = grid.X[bi];
    rep.Y = grid.Y[bj];
    const bool wa = std::abs(state.w.at(bi, bj)) >= threshold;
    const bool va = std::abs(state.v.at(bi, bj)) >= threshold;
    rep.variable = (wa && va) ? "v-or-w" : (wa ? "w" : "v");
    if (inv) {
      rep.mapped = true;
      rep.t = inv->t.at(bi, bj);
      rep.x = inv->x.at(bi, bj);
    }
  }
  return rep;
}

SweepReport pq_stability_sweep(const ModelSpec2& spec, const std::vector<Grid2>& grids,
                               const SolveOptions& opts) {
  if (grids.size() < 2) throw InvariantError("stability sweep needs at least 2 resolutions");
  SweepReport rep;
  rep.regime = wave_regime_label(spec.lambda);
  SolveOptions o = opts;
  o.throw_on_divergence = false;
  for (const Grid2& g : grids) {
    SolveResult2 res = picard_solve(spec, g, o);
    SweepRow row;
    row.n = g.n;
    row.converged = res.history.converged;
    row.iterations = res.history.iterations;
    if (!res.history.converged) {
      rep.notes.push_back("n=" + std::to_string(g.n) + ": iteration did not converge");
      rep.rows.push_back(row);
      continue;
    }
    InverseResult2 inv = inverse_transform2(spec, g, res.state, /*throw_on_mismatch=*/false);
    BlowupReport2 b = detect_blowup2(g, res.state, 3.14159265358979323846 - 1e-3, &inv);
    row.p_min = b.p_min;
    row.p_max = b.p_max;
    row.q_min = b.q_min;
    row.q_max = b.q_max;
    row.detected = b.detected;
    row.blowup_t = b.detected && b.mapped ? b.t : 0.0;
    if (!res.history.positivity_events.empty())
      rep.notes.push_back("n=" + std::to_string(g.n) + ": positivity loss recorded");
    rep.rows.push_back(row);
  }
  const auto& a = rep.rows[rep.rows.size() - 2];
  const auto& b = rep.rows[rep.rows.size() - 1];
  if (a.converged && b.converged) {
    auto close = [](double x, double y) {
      return std::abs(x - y) < 0.05 * std::max({std::abs(x), std::abs(y), 1e-300});
    };
    rep.pq_cauchy = close(a.p_min, b.p_min) && close(a.p_max, b.p_max) &&
                    close(a.q_min, b.q_min) && close(a.q_max, b.q_max);
  }
  return rep;
}

}  // namespace charwave
