#include "charwave/unichar.hpp"

#include <algorithm>
#include <cmath>

#include "charwave/errors.hpp"

namespace charwave {
namespace {

double weight(double kappa, double T, double Y) {
  return std::exp(-kappa * (T + std::abs(Y)));
}

// Per-line maxima reduced serially afterwards keep the norms bit-deterministic
// under any thread count.
struct LineMax {
  std::vector<double> weighted, plain;
  explicit LineMax(std::size_t lines) : weighted(lines, 0.0), plain(lines, 0.0) {}
  double max_weighted() const { return *std::max_element(weighted.begin(), weighted.end()); }
  double max_plain() const { return *std::max_element(plain.begin(), plain.end()); }
};

}  // namespace

CumulativeMap initial_coordinate(const ModelSpec1& spec) {
  const double ex = spec.lambda.stretch_exponent();
  const auto& du0 = spec.data.du0;
  // The integrand is >= 1, so Y(x) >= x and [0, r] always covers Y <= r.
  return CumulativeMap(
      [du0, ex](double x) {
        const double d = du0(x);
        return std::pow(1.0 + d * d, ex);
      },
      0.0, spec.r, 0.0, 1e-12);
}

Grid1 make_grid1(const ModelSpec1& spec, int n) {
  if (n < 16) throw InvariantError("grid needs at least 16 nodes per axis");
  Grid1 g;
  g.n = n;
  g.r = spec.r;
  g.f_prime0 = spec.flux.df(0.0);
  const double Y_lo = std::min(0.0, -g.f_prime0 * g.r);
  g.T.resize(n);
  g.Y.resize(n);
  g.hT = g.r / (n - 1);
  g.hY = (g.r - Y_lo) / (n - 1);
  for (int k = 0; k < n; ++k) {
    g.T[k] = g.hT * k;
    g.Y[k] = Y_lo + g.hY * k;
  }
  g.T.back() = g.r;
  g.Y.back() = g.r;
  const double tol = 1e-12 * (1.0 + g.r);
  g.mask.assign(static_cast<std::size_t>(n) * n, 0);
  g.first_j.assign(n, n);
  g.Y_start.assign(n, 0.0);
  g.first_i.assign(n, n);
  g.T_start.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double ys = -g.f_prime0 * g.T[i];
    g.Y_start[i] = ys;
    for (int j = 0; j < n; ++j)
      if (g.Y[j] >= ys - tol) {
        g.first_j[i] = j;
        break;
      }
    for (int j = g.first_j[i]; j < n; ++j) g.mask[static_cast<std::size_t>(i) * n + j] = 1;
  }
  for (int j = 0; j < n; ++j) {
    if (g.Y[j] >= -tol) {
      g.T_start[j] = 0.0;
      g.first_i[j] = 0;
    } else {
      g.T_start[j] = -g.Y[j] / g.f_prime0;
      for (int i = 0; i < n; ++i)
        if (g.T[i] >= g.T_start[j] - tol) {
          g.first_i[j] = i;
          break;
        }
    }
  }
  return g;
}

Rhs1 rhs_semilinear(double /*u*/, double v, double xi, double d2f, const LambdaParam& lambda) {
  const double sv = std::sin(v);
  const double s2 = std::sin(0.5 * v);
  const double c2 = std::cos(0.5 * v);
  const double C = c2 * c2;
  Rhs1 r;
  r.u_Y = 0.5 * xi * sv * cos2_pow(C, lambda.rhs_exponent());
  r.v_T = -2.0 * lambda.value * d2f * s2 * s2;
  r.xi_T = 0.5 * d2f * xi * sv;
  return r;
}

double rhs_S(double /*u*/, double v, double xi, double d2f, const LambdaParam& lambda) {
  const double s2 = std::sin(0.5 * v);
  const double c2 = std::cos(0.5 * v);
  return (1.0 - lambda.value) * d2f * xi * s2 * s2 * cos2_pow(c2 * c2, lambda.rhs_exponent());
}

double default_kappa1(const ModelSpec1& spec) {
  const ValidationReport rep = validate_model1(spec);
  const double lam = spec.lambda.value;
  const double growth = std::max(1.0, (1.0 - lam) / lam);
  return 2.0 * std::max(1.0, rep.d2f_sup) * std::max(1.0, spec.r) * growth;
}

SolveResult1 solve_semilinear(const ModelSpec1& spec, const Grid1& grid,
                              const SolveOptions& opts) {
  const int n = grid.n;
  const auto N = static_cast<std::size_t>(n);
  const LambdaParam lam = spec.lambda;
  const double kappa = opts.kappa.value_or(default_kappa1(spec));

  // Initial-line data, sampled through the inverse of the coordinate map.
  CumulativeMap ymap = initial_coordinate(spec);
  std::vector<double> u_data(N, 0.0), v_data(N, 0.0);
  for (int j = 0; j < n; ++j) {
    if (grid.Y[j] < 0.0) continue;  // boundary-image columns start at u = v = 0
    const double x = ymap.inverse(grid.Y[j]);
    u_data[j] = spec.data.u0(x);
    v_data[j] = 2.0 * std::atan(spec.data.du0(x));
  }

  // Seeds: data extended constant along T (the integration direction of v and
  // xi); boundary-image columns extend their boundary values.
  State1 st;
  st.u = Field(N, N);
  st.v = Field(N, N);
  st.xi = Field(N, N, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      st.u.at(i, j) = u_data[j];
      st.v.at(i, j) = v_data[j];
    }

  Field nu(N, N), nv(N, N), nxi(N, N);
  Field fu_Y(N, N), fv_T(N, N), fxi_T(N, N);

  ConvergenceHistory hist;
  hist.kappa = kappa;
  double prev_plain = 0.0;

  for (int it = 1; it <= opts.max_iter; ++it) {
    // Right-hand sides at the current iterate (pure, node-local).
    for_each_index(opts.exec, n, [&](std::ptrdiff_t i) {
      for (int j = 0; j < n; ++j) {
        if (!grid.inside(i, j)) continue;
        const Rhs1 r = rhs_semilinear(st.u.at(i, j), st.v.at(i, j), st.xi.at(i, j),
                                      spec.flux.d2f(st.u.at(i, j)), lam);
        fu_Y.at(i, j) = r.u_Y;
        fv_T.at(i, j) = r.v_T;
        fxi_T.at(i, j) = r.xi_T;
      }
    });

    // u: along each T-line from the boundary image (u = 0 there). The
    // boundary-point right-hand side vanishes identically (v = 0).
    for_each_index(opts.exec, n, [&](std::ptrdiff_t i) {
      if (i == 0) {
        for (int j = 0; j < n; ++j) nu.at(0, j) = u_data[j];  // pinned data row
        return;
      }
      const int j0 = grid.first_j[i];
      if (j0 >= n) return;
      const double d0 = grid.Y[j0] - grid.Y_start[i];
      nu.at(i, j0) = 0.5 * d0 * fu_Y.at(i, j0);
      for (int j = j0 + 1; j < n; ++j)
        nu.at(i, j) = nu.at(i, j - 1) + 0.5 * grid.hY * (fu_Y.at(i, j - 1) + fu_Y.at(i, j));
    });

    // v, xi: along each Y-column from the initial line (Y >= 0) or from the
    // boundary image (Y < 0, boundary RHS vanishes identically).
    for_each_index(opts.exec, n, [&](std::ptrdiff_t j) {
      const int i0 = grid.first_i[j];
      if (i0 >= n) return;
      if (grid.Y[j] >= 0.0) {
        nv.at(0, j) = v_data[j];
        nxi.at(0, j) = 1.0;
        for (int i = 1; i < n; ++i) {
          nv.at(i, j) = nv.at(i - 1, j) + 0.5 * grid.hT * (fv_T.at(i - 1, j) + fv_T.at(i, j));
          nxi.at(i, j) =
              nxi.at(i - 1, j) + 0.5 * grid.hT * (fxi_T.at(i - 1, j) + fxi_T.at(i, j));
        }
      } else {
        const double d0 = grid.T[i0] - grid.T_start[j];
        nv.at(i0, j) = 0.5 * d0 * fv_T.at(i0, j);
        nxi.at(i0, j) = 1.0 + 0.5 * d0 * fxi_T.at(i0, j);
        for (int i = i0 + 1; i < n; ++i) {
          nv.at(i, j) = nv.at(i - 1, j) + 0.5 * grid.hT * (fv_T.at(i - 1, j) + fv_T.at(i, j));
          nxi.at(i, j) =
              nxi.at(i - 1, j) + 0.5 * grid.hT * (fxi_T.at(i - 1, j) + fxi_T.at(i, j));
        }
      }
    });

    // Update norms (per-line partials reduced serially: bit-deterministic).
    LineMax lm(N);
    for_each_index(opts.exec, n, [&](std::ptrdiff_t i) {
      double w = 0.0, p = 0.0;
      for (int j = 0; j < n; ++j) {
        if (!grid.inside(i, j)) continue;
        const double du = std::abs(nu.at(i, j) - st.u.at(i, j));
        const double dv = std::abs(nv.at(i, j) - st.v.at(i, j));
        const double dx = std::abs(nxi.at(i, j) - st.xi.at(i, j));
        const double d = std::max({du, dv, dx});
        p = std::max(p, d);
        w = std::max(w, d * weight(kappa, grid.T[i], grid.Y[j]));
      }
      lm.weighted[i] = w;
      lm.plain[i] = p;
    });
    const double wnorm = lm.max_weighted();
    const double pnorm = lm.max_plain();
    hist.rows.push_back({it, wnorm, pnorm});
    std::swap(st.u, nu);
    std::swap(st.v, nv);
    std::swap(st.xi, nxi);
    hist.iterations = it;

    if (!std::isfinite(pnorm) || (it > 4 && pnorm > 1e8 * (1.0 + prev_plain))) {
      if (opts.throw_on_divergence)
        throw FixedPointDivergenceError("fixed-point iteration diverged at iteration " +
                                        std::to_string(it));
      return {std::move(st), std::move(hist)};
    }
    prev_plain = pnorm;
    // Conservative stop: the plain norm dominates the weighted one (weight
    // <= 1), so this never stops before the weighted criterion holds, and
    // never reports an unconverged far field when kappa is large.
    if (pnorm < opts.tol) {
      hist.converged = true;
      break;
    }
  }
  if (!hist.converged && opts.throw_on_divergence)
    throw FixedPointDivergenceError("fixed-point iteration did not reach tolerance within " +
                                    std::to_string(opts.max_iter) + " iterations");

  // S = u_t + f'(u) u_x, defined by the construction for lambda <= 1/3 or
  // lambda = 1/2; it vanishes on the boundary image and integrates along Y.
  if (lam.regime == Regime::Holder13 || lam.regime == Regime::Half) {
    Field S(N, N);
    Field fS(N, N);
    for_each_index(opts.exec, n, [&](std::ptrdiff_t i) {
      for (int j = 0; j < n; ++j)
        if (grid.inside(i, j))
          fS.at(i, j) = rhs_S(st.u.at(i, j), st.v.at(i, j), st.xi.at(i, j),
                              spec.flux.d2f(st.u.at(i, j)), lam);
    });
    for_each_index(opts.exec, n, [&](std::ptrdiff_t i) {
      const int j0 = grid.first_j[i];
      if (j0 >= n) return;
      const double d0 = grid.Y[j0] - grid.Y_start[i];
      S.at(i, j0) = 0.5 * d0 * fS.at(i, j0);
      for (int j = j0 + 1; j < n; ++j)
        S.at(i, j) = S.at(i, j - 1) + 0.5 * grid.hY * (fS.at(i, j - 1) + fS.at(i, j));
    });
    st.S = std::move(S);
  }
  return {std::move(st), std::move(hist)};
}

InverseResult1 inverse_transform(const ModelSpec1& spec, const Grid1& grid,
                                 const State1& state, bool throw_on_mismatch) {
  const int n = grid.n;
  const auto N = static_cast<std::size_t>(n);
  const LambdaParam lam = spec.lambda;
  const double se = lam.stretch_exponent();

  InverseResult1 out;
  out.x = Field(N, N);
  Field& x = out.x;

  // Primary route: x_Y = xi C^{1/(2 lambda)} >= 0 from the boundary (x = 0).
  for (int i = 0; i < n; ++i) {
    const int j0 = grid.first_j[i];
    if (j0 >= n) continue;
    auto xY = [&](int jj) {
      const double c2 = std::cos(0.5 * state.v.at(i, jj));
      return state.xi.at(i, jj) * cos2_pow(c2 * c2, se);
    };
    const double d0 = grid.Y[j0] - grid.Y_start[i];
    x.at(i, j0) = 0.5 * d0 * (1.0 + xY(j0));  // boundary integrand is exactly 1
    for (int j = j0 + 1; j < n; ++j)
      x.at(i, j) = x.at(i, j - 1) + 0.5 * grid.hY * (xY(j - 1) + xY(j));
  }

  // Cross-check route: x_T = f'(u) from the initial map along each column.
  CumulativeMap ymap = initial_coordinate(spec);
  double mismatch = 0.0, fp_sup = 1.0;
  Field xa(N, N);
  for (int j = 0; j < n; ++j) {
    const int i0 = grid.first_i[j];
    if (i0 >= n) continue;
    if (grid.Y[j] >= 0.0) {
      xa.at(0, j) = ymap.inverse(grid.Y[j]);
      for (int i = 1; i < n; ++i)
        xa.at(i, j) = xa.at(i - 1, j) + 0.5 * grid.hT * (spec.flux.df(state.u.at(i - 1, j)) +
                                                         spec.flux.df(state.u.at(i, j)));
    } else {
      const double d0 = grid.T[i0] - grid.T_start[j];
      xa.at(i0, j) = 0.5 * d0 * (grid.f_prime0 + spec.flux.df(state.u.at(i0, j)));
      for (int i = i0 + 1; i < n; ++i)
        xa.at(i, j) = xa.at(i - 1, j) + 0.5 * grid.hT * (spec.flux.df(state.u.at(i - 1, j)) +
                                                         spec.flux.df(state.u.at(i, j)));
    }
    for (int i = i0; i < n; ++i)
      if (grid.inside(i, j)) {
        mismatch = std::max(mismatch, std::abs(x.at(i, j) - xa.at(i, j)));
        fp_sup = std::max(fp_sup, std::abs(spec.flux.df(state.u.at(i, j))));
      }
  }
  out.path_mismatch = mismatch;
  const double h = std::max(grid.hY, grid.hT);
  if (throw_on_mismatch && mismatch > 50.0 * h * fp_sup)
    throw CompatibilityError("inverse-map path mismatch " + std::to_string(mismatch) +
                             " exceeds the O(h) tolerance");

  out.samples.a_name = "Y";
  out.samples.b_name = "T";
  out.samples.rows.reserve(N * N / 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (grid.inside(i, j))
        out.samples.rows.push_back(
            {grid.T[i], x.at(i, j), state.u.at(i, j), grid.Y[j], grid.T[i]});
  return out;
}

std::vector<double> sobolev_seminorm(const ModelSpec1& spec, const Grid1& grid,
                                     const State1& state) {
  const int n = grid.n;
  const double p = 1.0 / spec.lambda.value;
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const int j0 = grid.first_j[i];
    if (j0 >= n) continue;
    auto dens = [&](int jj) {
      const double s = std::abs(std::sin(0.5 * state.v.at(i, jj)));
      return std::pow(s, p) * state.xi.at(i, jj);
    };
    // Boundary integrand vanishes (v = 0 there).
    const double d0 = grid.Y[j0] - grid.Y_start[i];
    double acc = 0.5 * d0 * dens(j0);
    for (int j = j0 + 1; j < n; ++j) acc += 0.5 * grid.hY * (dens(j - 1) + dens(j));
    out[i] = acc;
  }
  return out;
}

BlowupReport1 detect_blowup1(const ModelSpec1& spec, const Grid1& grid, const State1& state,
                             double threshold) {
  BlowupReport1 rep;
  const int n = grid.n;
  double extreme = 0.0;
  for (int i = 0; i < n && !rep.detected; ++i)
    for (int j = 0; j < n; ++j) {
      if (!grid.inside(i, j)) continue;
      if (std::abs(state.v.at(i, j)) >= threshold) {
        rep.detected = true;
        rep.T = grid.T[i];
        rep.Y = grid.Y[j];
        rep.t = grid.T[i];
        // Physical abscissa by integrating the stretch along this T-line only.
        const int j0 = grid.first_j[i];
        auto xY = [&](int jj) {
          const double c2 = std::cos(0.5 * state.v.at(i, jj));
          return state.xi.at(i, jj) * cos2_pow(c2 * c2, spec.lambda.stretch_exponent());
        };
        double xv = 0.5 * (grid.Y[j0] - grid.Y_start[i]) * (1.0 + xY(j0));
        for (int jj = j0 + 1; jj <= j; ++jj)
          xv += 0.5 * grid.hY * (xY(jj - 1) + xY(jj));
        rep.x = xv;
        break;
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (grid.inside(i, j) && std::abs(state.v.at(i, j)) > std::abs(extreme))
        extreme = state.v.at(i, j);
  rep.v_extreme = extreme;
  return rep;
}

double BumpTestFn::value(double x, double t) const {
  const double sx_ = (x - x0) / sx, st_ = (t - t0) / st;
  if (std::abs(sx_) >= 1.0 || std::abs(st_) >= 1.0) return 0.0;
  const double qx = (1.0 - sx_ * sx_), qt = (1.0 - st_ * st_);
  return qx * qx * qt * qt;
}
double BumpTestFn::ddx(double x, double t) const {
  const double sx_ = (x - x0) / sx, st_ = (t - t0) / st;
  if (std::abs(sx_) >= 1.0 || std::abs(st_) >= 1.0) return 0.0;
  const double qx = (1.0 - sx_ * sx_), qt = (1.0 - st_ * st_);
  return (-4.0 * sx_ * qx / sx) * qt * qt;
}
double BumpTestFn::ddt(double x, double t) const {
  const double sx_ = (x - x0) / sx, st_ = (t - t0) / st;
  if (std::abs(sx_) >= 1.0 || std::abs(st_) >= 1.0) return 0.0;
  const double qx = (1.0 - sx_ * sx_), qt = (1.0 - st_ * st_);
  return qx * qx * (-4.0 * st_ * qt / st);
}

double weak_residual(const ModelSpec1& spec, const Grid1& grid, const State1& state,
                     const InverseResult1& inv, const BumpTestFn& phi) {
  const int n = grid.n;
  const LambdaParam lam = spec.lambda;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double wi = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    for (int j = 0; j < n; ++j) {
      if (!grid.inside(i, j)) continue;
      const double wj = (j == 0 || j == n - 1) ? 0.5 : 1.0;
      const double xij = inv.x.at(i, j);
      const double tij = grid.T[i];
      const double pv = phi.value(xij, tij);
      const double pt = phi.ddt(xij, tij);
      const double px = phi.ddx(xij, tij);
      if (pv == 0.0 && pt == 0.0 && px == 0.0) continue;
      const double u = state.u.at(i, j);
      const double v = state.v.at(i, j);
      const double xi = state.xi.at(i, j);
      const double d2f = spec.flux.d2f(u);
      const double s2 = std::sin(0.5 * v), c2 = std::cos(0.5 * v);
      const double Ce = cos2_pow(c2 * c2, lam.rhs_exponent());
      const double u_Y = 0.5 * xi * std::sin(v) * Ce;
      const double phi_chase = pt + spec.flux.df(u) * px;  // characteristic derivative
      const double integrand =
          -u_Y * phi_chase + (lam.value - 1.0) * d2f * xi * s2 * s2 * Ce * pv;
      acc += wi * wj * integrand;
    }
  }
  return std::abs(acc * grid.hT * grid.hY);
}

double energy_residual(const ModelSpec1& spec, const Grid1& grid, const State1& state,
                       const InverseResult1& inv, double smooth_floor) {
  const int n = grid.n;
  const double p = 1.0 / spec.lambda.value;
  // Common physical window across T-lines (domain of determinacy shrinks).
  double x_hi = 1e300;
  for (int i = 0; i < n; ++i) x_hi = std::min(x_hi, inv.x.at(i, n - 1));
  x_hi *= 0.95;
  if (!(x_hi > 0.0)) throw WindowError("empty physical window for the energy residual");
  const double hx = x_hi / (n - 1);

  // Resample density and flux onto the uniform lattice; invalidate lattice
  // cells whose source samples touch the cusp region (cos^2(v/2) < floor).
  Field dens(n, n), flux(n, n);
  Field valid(n, n, 0.0);
  std::vector<double> xs(n), ds(n), fs(n), ok(n);
  for (int i = 0; i < n; ++i) {
    const int j0 = grid.first_j[i];
    int m = 0;
    for (int j = j0; j < n; ++j) {
      const double v = state.v.at(i, j);
      const double c2 = std::cos(0.5 * v);
      const double C = c2 * c2;
      const double ux = std::tan(0.5 * v);
      xs[m] = inv.x.at(i, j);
      const double e = std::pow(std::abs(ux), p);
      ds[m] = e;
      fs[m] = spec.flux.df(state.u.at(i, j)) * e;
      ok[m] = (C >= smooth_floor) ? 1.0 : 0.0;
      ++m;
    }
    if (m < 2) throw WindowError("degenerate T-line in the energy residual");
    std::span<const double> sx(xs.data(), static_cast<std::size_t>(m));
    for (int k = 0; k < n; ++k) {
      const double xk = hx * k;
      dens.at(i, k) = interp_linear(sx, {ds.data(), static_cast<std::size_t>(m)}, xk);
      flux.at(i, k) = interp_linear(sx, {fs.data(), static_cast<std::size_t>(m)}, xk);
      valid.at(i, k) =
          interp_linear(sx, {ok.data(), static_cast<std::size_t>(m)}, xk) >= 1.0 ? 1.0 : 0.0;
    }
  }
  double res = 0.0;
  for (int i = 1; i + 1 < n; ++i)
    for (int k = 1; k + 1 < n; ++k) {
      if (valid.at(i, k) < 1.0 || valid.at(i - 1, k) < 1.0 || valid.at(i + 1, k) < 1.0 ||
          valid.at(i, k - 1) < 1.0 || valid.at(i, k + 1) < 1.0)
        continue;
      const double dt = (dens.at(i + 1, k) - dens.at(i - 1, k)) / (2.0 * grid.hT);
      const double dx = (flux.at(i, k + 1) - flux.at(i, k - 1)) / (2.0 * hx);
      res = std::max(res, std::abs(dt + dx));
    }
  return res;
}

double cross_derivative_residual(const Grid1& grid, const State1& state) {
  if (!state.S) throw NotApplicableError("S field not constructed for this regime");
  const int n = grid.n;
  double res = 0.0;
  for (int i = 1; i + 1 < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!grid.inside(i - 1, j) || !grid.inside(i + 1, j)) continue;
      const double ut = (state.u.at(i + 1, j) - state.u.at(i - 1, j)) / (2.0 * grid.hT);
      res = std::max(res, std::abs(ut - state.S->at(i, j)));
    }
  return res;
}

}  // namespace charwave
