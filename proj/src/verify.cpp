#include "charwave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "charwave/errors.hpp"

namespace charwave {

namespace {

constexpr double kGradientCap = 1e3;
constexpr double kCflLimit = 0.9;

void check_lattice_common(int nx, double cfl) {
  if (nx < 16) throw InvariantError("FD lattice needs at least 16 nodes");
  if (!(cfl > 0.0)) throw StabilityError("CFL must be positive");
  if (cfl > kCflLimit) throw StabilityError("CFL exceeds the stability limit 0.9");
}

// Keeps every stride-th time level, re-thinning (dropping every other kept
// level) whenever the store would exceed the cap, so long runs stay bounded
// while short runs keep every level.
class SnapshotKeeper {
 public:
  SnapshotKeeper(std::size_t nx, std::size_t cap) : nx_(nx), cap_(cap) {}

  void push(double t, std::span<const double> u, std::span<const double> rho,
            bool force = false) {
    ++step_;
    if (!force && (step_ - 1) % stride_ != 0) return;
    times_.push_back(t);
    levels_u_.insert(levels_u_.end(), u.begin(), u.end());
    if (!rho.empty()) levels_rho_.insert(levels_rho_.end(), rho.begin(), rho.end());
    if (times_.size() > cap_) thin();
  }

  FDSolution finish(std::vector<double> xs, double cfl) {
    FDSolution out;
    out.x = std::move(xs);
    out.t = std::move(times_);
    out.u.ni = out.t.size();
    out.u.nj = nx_;
    out.u.a = std::move(levels_u_);
    if (!levels_rho_.empty()) {
      out.rho.ni = out.t.size();
      out.rho.nj = nx_;
      out.rho.a = std::move(levels_rho_);
    }
    out.cfl = cfl;
    return out;
  }

 private:
  void thin() {
    std::vector<double> ts;
    std::vector<double> lu, lr;
    for (std::size_t k = 0; k < times_.size(); k += 2) {
      ts.push_back(times_[k]);
      lu.insert(lu.end(), levels_u_.begin() + static_cast<std::ptrdiff_t>(k * nx_),
                levels_u_.begin() + static_cast<std::ptrdiff_t>((k + 1) * nx_));
      if (!levels_rho_.empty())
        lr.insert(lr.end(), levels_rho_.begin() + static_cast<std::ptrdiff_t>(k * nx_),
                  levels_rho_.begin() + static_cast<std::ptrdiff_t>((k + 1) * nx_));
    }
    times_ = std::move(ts);
    levels_u_ = std::move(lu);
    levels_rho_ = std::move(lr);
    stride_ *= 2;
  }

  std::size_t nx_;
  std::size_t cap_;
  std::size_t stride_ = 1;
  std::size_t step_ = 0;
  std::vector<double> times_;
  std::vector<double> levels_u_;
  std::vector<double> levels_rho_;
};

}  // namespace

FDSolution fd_solve_uni(const ModelSpec1& spec, const FDLattice1& lattice, double t_end) {
  check_lattice_common(lattice.nx, lattice.cfl);
  if (!(lattice.x_max > 0.0)) throw InvariantError("FD window length must be positive");
  if (!(t_end >= 0.0)) throw InvariantError("t_end must be non-negative");

  // When the flux carries a closed-form blowup certificate (constant f''),
  // refuse horizons that reach it up front. The runtime gradient cap below is
  // only a backstop: upwind diffusion saturates the discrete gradient at a
  // mesh-dependent level far under the cap, so it cannot witness the blowup.
  try {
    const std::optional<double> t_star = riccati_blowup_time(spec);
    if (t_star && t_end >= *t_star)
      throw PreBlowupOnlyError(
          "requested horizon t = " + std::to_string(t_end) +
          " reaches the closed-form gradient blowup at t = " + std::to_string(*t_star) +
          ": the FD oracle is valid pre-blowup only");
  } catch (const NotApplicableError&) {
    // No certificate for this flux; rely on the runtime cap.
  }

  const std::size_t nx = static_cast<std::size_t>(lattice.nx);
  const double dx = lattice.x_max / static_cast<double>(nx - 1);
  std::vector<double> xs(nx);
  for (std::size_t k = 0; k < nx; ++k) xs[k] = static_cast<double>(k) * dx;

  std::vector<double> rho(nx), u(nx);
  for (std::size_t k = 0; k < nx; ++k) rho[k] = spec.data.du0(xs[k]);
  cumulative_trapezoid(rho, dx, 0.0, u);

  // rho_t + f'(u) rho_x = -lambda f''(u) rho^2, upwinded by the sign of the
  // transport speed; zero inflow (the data continues by u = 0 outside).
  const double lam = spec.lambda.value;
  auto rhs = [&](const std::vector<double>& r, const std::vector<double>& uu,
                 std::vector<double>& out) {
    for (std::size_t k = 0; k < nx; ++k) {
      const double s = spec.flux.df(uu[k]);
      double drdx;
      if (s >= 0.0) {
        const double left = (k == 0) ? 0.0 : r[k - 1];
        drdx = (r[k] - left) / dx;
      } else {
        const double right = (k + 1 == nx) ? 0.0 : r[k + 1];
        drdx = (right - r[k]) / dx;
      }
      out[k] = -s * drdx - lam * spec.flux.d2f(uu[k]) * r[k] * r[k];
    }
  };

  SnapshotKeeper keep(nx, 2048);
  keep.push(0.0, u, rho, true);

  std::vector<double> k1(nx), k2(nx), rho_star(nx), u_star(nx);
  double t = 0.0;
  double cfl_used = 0.0;
  while (t < t_end - 1e-14 * (1.0 + t_end)) {
    double speed_sup = 0.0;
    for (std::size_t k = 0; k < nx; ++k)
      speed_sup = std::max(speed_sup, std::abs(spec.flux.df(u[k])));
    double dt = lattice.cfl * dx / std::max(speed_sup, 1e-8);
    dt = std::min(dt, t_end - t);
    cfl_used = std::max(cfl_used, speed_sup * dt / dx);

    rhs(rho, u, k1);
    for (std::size_t k = 0; k < nx; ++k) rho_star[k] = rho[k] + dt * k1[k];
    cumulative_trapezoid(rho_star, dx, 0.0, u_star);
    rhs(rho_star, u_star, k2);
    for (std::size_t k = 0; k < nx; ++k) rho[k] += 0.5 * dt * (k1[k] + k2[k]);
    cumulative_trapezoid(rho, dx, 0.0, u);
    t += dt;

    double rho_sup = 0.0;
    for (double v : rho) rho_sup = std::max(rho_sup, std::abs(v));
    if (!(rho_sup <= kGradientCap))
      throw PreBlowupOnlyError("gradient magnitude exceeded " + std::to_string(kGradientCap) +
                               " at t = " + std::to_string(t) +
                               ": the FD oracle is valid pre-blowup only");
    const bool last = !(t < t_end - 1e-14 * (1.0 + t_end));
    keep.push(t, u, rho, last);
  }

  return keep.finish(std::move(xs), cfl_used);
}

FDSolution fd_solve_wave(const ModelSpec2& spec, const FDLattice2& lattice, double t_end) {
  if (!(lattice.dx > 0.0)) throw InvariantError("FD spacing must be positive");
  if (!(lattice.x_window > 0.0)) throw InvariantError("FD window half-width must be positive");
  if (!(lattice.cfl > 0.0)) throw StabilityError("CFL must be positive");
  if (lattice.cfl > kCflLimit) throw StabilityError("CFL exceeds the stability limit 0.9");
  if (!(t_end >= 0.0)) throw InvariantError("t_end must be non-negative");

  // Estimate the top speed from the data, then size the domain so nothing
  // entering from the boundary can reach the window within t_end.
  double c_max = 0.0;
  {
    const double probe = lattice.x_window + 10.0;
    for (int k = 0; k <= 4096; ++k) {
      const double x = -probe + 2.0 * probe * static_cast<double>(k) / 4096.0;
      c_max = std::max(c_max, spec.speed.c(spec.data.u0(x)));
    }
    if (!(c_max > 0.0)) throw InvariantError("wave speed must be positive on the data");
  }
  const double half = lattice.x_window + c_max * t_end + 4.0 * lattice.dx;
  const std::size_t nh = static_cast<std::size_t>(std::ceil(half / lattice.dx));
  const std::size_t nx = 2 * nh + 1;
  if (nx < 16) throw InvariantError("FD lattice needs at least 16 nodes");
  const double dx = lattice.dx;
  std::vector<double> xs(nx);
  for (std::size_t k = 0; k < nx; ++k)
    xs[k] = (static_cast<double>(k) - static_cast<double>(nh)) * dx;

  const double dt_target = lattice.cfl * dx / (1.05 * c_max);
  const std::size_t nsteps =
      (t_end > 0.0) ? static_cast<std::size_t>(std::ceil(t_end / dt_target)) : 0;
  const double dt = (nsteps > 0) ? t_end / static_cast<double>(nsteps) : dt_target;

  const double lam = spec.lambda.value;
  std::vector<double> u_prev(nx), u_cur(nx), u_next(nx);
  for (std::size_t k = 0; k < nx; ++k) u_prev[k] = spec.data.u0(xs[k]);

  SnapshotKeeper keep(nx, 2048);
  keep.push(0.0, u_prev, {}, true);
  double cfl_used = 0.0;

  if (nsteps > 0) {
    // Taylor first step: u1 analytic, u0'' by centered difference, u0' analytic.
    for (std::size_t k = 0; k < nx; ++k) {
      const double uxx = (k == 0 || k + 1 == nx)
                             ? 0.0
                             : (u_prev[k + 1] - 2.0 * u_prev[k] + u_prev[k - 1]) / (dx * dx);
      const double ux = spec.data.du0(xs[k]);
      const double c = spec.speed.c(u_prev[k]);
      const double acc = c * c * uxx + 2.0 * lam * c * spec.speed.dc(u_prev[k]) * ux * ux;
      u_next[k] = u_prev[k] + dt * spec.data.u1(xs[k]) + 0.5 * dt * dt * acc;
    }
    u_next[0] = 2.0 * u_next[1] - u_next[2];
    u_next[nx - 1] = 2.0 * u_next[nx - 2] - u_next[nx - 3];
    u_cur = u_next;
    keep.push(dt, u_cur, {}, nsteps == 1);

    for (std::size_t n = 2; n <= nsteps; ++n) {
      double c_sup = 0.0;
      for (std::size_t k = 1; k + 1 < nx; ++k) {
        const double c = spec.speed.c(u_cur[k]);
        c_sup = std::max(c_sup, c);
        const double uxx = (u_cur[k + 1] - 2.0 * u_cur[k] + u_cur[k - 1]) / (dx * dx);
        const double ux = (u_cur[k + 1] - u_cur[k - 1]) / (2.0 * dx);
        const double acc = c * c * uxx + 2.0 * lam * c * spec.speed.dc(u_cur[k]) * ux * ux;
        u_next[k] = 2.0 * u_cur[k] - u_prev[k] + dt * dt * acc;
      }
      u_next[0] = 2.0 * u_next[1] - u_next[2];
      u_next[nx - 1] = 2.0 * u_next[nx - 2] - u_next[nx - 3];
      cfl_used = std::max(cfl_used, c_sup * dt / dx);
      if (c_sup * dt / dx > kCflLimit)
        throw StabilityError("running CFL exceeded 0.9 as the wave speed grew");
      std::swap(u_prev, u_cur);
      std::swap(u_cur, u_next);
      keep.push(static_cast<double>(n) * dt, u_cur, {}, n == nsteps);
    }
  }

  return keep.finish(std::move(xs), cfl_used);
}

double dalembert_exact(double c0, const RealFn& u0, const RealFn& u1, double x, double t) {
  if (!(c0 > 0.0)) throw InvariantError("constant wave speed must be positive");
  const double l = x - c0 * t, r = x + c0 * t;
  const double avg = 0.5 * (u0(l) + u0(r));
  const double mom = (l == r) ? 0.0 : integrate(u1, l, r, 1e-12);
  return avg + mom / (2.0 * c0);
}

std::optional<double> riccati_blowup_time(const ModelSpec1& spec) {
  const int n = 4096;
  // f'' must be constant over the data's value range (checked on a lattice).
  double umin = 0.0, umax = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double x = spec.r * static_cast<double>(k) / static_cast<double>(n);
    const double u = spec.data.u0(x);
    umin = std::min(umin, u);
    umax = std::max(umax, u);
  }
  const double pad = 0.1 * (1.0 + umax - umin);
  const double kappa0 = spec.flux.d2f(0.0);
  for (int k = 0; k <= n; ++k) {
    const double u =
        (umin - pad) + (umax - umin + 2.0 * pad) * static_cast<double>(k) / static_cast<double>(n);
    if (std::abs(spec.flux.d2f(u) - kappa0) > 1e-10 * std::max(1.0, std::abs(kappa0)))
      throw NotApplicableError(
          "closed-form blowup time needs a constant second derivative of the flux");
  }

  // Along characteristics dR/dt = -lambda kappa0 R^2 with R0 = u0'; the
  // denominator 1 + lambda kappa0 R0 t first vanishes where -kappa0 R0 is
  // largest.
  double m = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double x = spec.r * static_cast<double>(k) / static_cast<double>(n);
    m = std::max(m, -kappa0 * spec.data.du0(x));
  }
  if (!(m > 0.0)) return std::nullopt;
  return 1.0 / (spec.lambda.value * m);
}

namespace {

// Linear-in-t of linear-in-x interpolation of an FD solution; returns false
// when (t, x) lies outside the stored lattice (with a tiny tolerance so exact
// final-time slices are not lost to roundoff).
bool fd_interp(const FDSolution& fd, double t, double x, double& out) {
  if (fd.t.empty() || fd.x.empty()) return false;
  const double ttol = 1e-9 * (1.0 + std::abs(fd.t.back()));
  if (t < fd.t.front() - ttol || t > fd.t.back() + ttol) return false;
  if (x < fd.x.front() - 1e-12 || x > fd.x.back() + 1e-12) return false;
  const double tc = std::clamp(t, fd.t.front(), fd.t.back());
  std::size_t hi = lower_index(fd.t, tc);
  if (hi == 0) hi = 1;
  if (hi >= fd.t.size()) hi = fd.t.size() - 1;
  const std::size_t lo = hi - 1;
  const double span = fd.t[hi] - fd.t[lo];
  const double w = (span > 0.0) ? (tc - fd.t[lo]) / span : 0.0;
  const double ulo = interp_linear(fd.x, std::span<const double>(fd.u.row(lo), fd.u.nj), x);
  const double uhi = interp_linear(fd.x, std::span<const double>(fd.u.row(hi), fd.u.nj), x);
  out = (1.0 - w) * ulo + w * uhi;
  return true;
}

struct DiffAccum {
  double linf = 0.0;
  double sum2 = 0.0;
  std::size_t count = 0;

  void add(double d) {
    linf = std::max(linf, std::abs(d));
    sum2 += d * d;
    ++count;
  }

  FieldDiff finish(const Window& w) const {
    if (count == 0) throw WindowError("no samples fall inside the comparison window");
    const double xeff = w.x_hi - w.x_lo;
    const double teff = w.t_hi - w.t_lo;
    // Degenerate (single-time) windows get one-dimensional L2 normalization.
    const double measure = (teff > 1e-12 * (1.0 + std::abs(w.t_hi))) ? teff * xeff : xeff;
    FieldDiff out;
    out.linf = linf;
    out.l2 = std::sqrt(measure * sum2 / static_cast<double>(count));
    out.count = count;
    return out;
  }
};

bool in_window(const Window& w, double t, double x) {
  const double ttol = 1e-9 * (1.0 + std::abs(w.t_hi));
  return t >= w.t_lo - ttol && t <= w.t_hi + ttol && x >= w.x_lo - 1e-12 && x <= w.x_hi + 1e-12;
}

}  // namespace

FieldDiff compare_fields(const PhysicalSamples& a, const FDSolution& b, const Window& w) {
  DiffAccum acc;
  for (const auto& row : a.rows) {
    if (!in_window(w, row.t, row.x)) continue;
    double ub;
    if (!fd_interp(b, row.t, row.x, ub)) continue;
    acc.add(row.u - ub);
  }
  return acc.finish(w);
}

FieldDiff compare_fields(const FDSolution& a, const FDSolution& b, const Window& w) {
  DiffAccum acc;
  for (std::size_t i = 0; i < a.t.size(); ++i) {
    for (std::size_t k = 0; k < a.x.size(); ++k) {
      if (!in_window(w, a.t[i], a.x[k])) continue;
      double ub;
      if (!fd_interp(b, a.t[i], a.x[k], ub)) continue;
      acc.add(a.u.at(i, k) - ub);
    }
  }
  return acc.finish(w);
}

PhysicalSamples fd_to_samples(const FDSolution& fd) {
  PhysicalSamples out;
  out.a_name = "x";
  out.b_name = "t";
  out.rows.reserve(fd.t.size() * fd.x.size());
  for (std::size_t i = 0; i < fd.t.size(); ++i)
    for (std::size_t k = 0; k < fd.x.size(); ++k)
      out.rows.push_back({fd.t[i], fd.x[k], fd.u.at(i, k), fd.x[k], fd.t[i]});
  return out;
}

namespace {

struct SampleLine {
  double t = 0.0;        // rescaled time
  std::vector<double> x;  // rescaled positions, strictly increasing
  std::vector<double> u;
};

// Groups consecutive equal-t rows into lines, keeps lines with enough
// coverage, and rescales the common x-window to unit length (time by the same
// factor). Returns the physical window length.
double build_lines(const PhysicalSamples& samples, std::vector<SampleLine>& lines) {
  struct RawLine {
    double t;
    std::vector<double> x, u;
  };
  std::vector<RawLine> raw;
  for (const auto& row : samples.rows) {
    if (raw.empty() || row.t != raw.back().t) raw.push_back({row.t, {}, {}});
    raw.back().x.push_back(row.x);
    raw.back().u.push_back(row.u);
  }
  raw.erase(std::remove_if(raw.begin(), raw.end(),
                           [](const RawLine& l) { return l.x.size() < 8; }),
            raw.end());
  if (raw.size() < 3)
    throw DegenerateSamplesError(
        "need at least three constant-t sample lines with 8+ points each");
  for (const auto& l : raw)
    for (std::size_t k = 1; k < l.x.size(); ++k)
      if (!(l.x[k] > l.x[k - 1]))
        throw DegenerateSamplesError("sample lines must be strictly increasing in x");

  double lo = raw.front().x.front(), hi = raw.front().x.back();
  for (const auto& l : raw) {
    lo = std::max(lo, l.x.front());
    hi = std::min(hi, l.x.back());
  }
  const double L = hi - lo;
  if (!(L > 0.0)) throw DegenerateSamplesError("sample lines share no x-window");

  const double t0 = raw.front().t;
  lines.clear();
  lines.reserve(raw.size());
  for (const auto& l : raw) {
    SampleLine s;
    s.t = (l.t - t0) / L;
    for (std::size_t k = 0; k < l.x.size(); ++k) {
      const double xr = (l.x[k] - lo) / L;
      if (xr < -1e-12 || xr > 1.0 + 1e-12) continue;
      s.x.push_back(std::clamp(xr, 0.0, 1.0));
      s.u.push_back(l.u[k]);
    }
    if (s.x.size() >= 8) lines.push_back(std::move(s));
  }
  if (lines.size() < 3) throw DegenerateSamplesError("too few usable sample lines");
  return L;
}

double line_interp(const SampleLine& l, double x) { return interp_linear(l.x, l.u, x); }

// First line index (searching forward, then backward) whose time differs from
// lines[i].t by at least dt; SIZE_MAX when none exists.
std::size_t line_at_dt(const std::vector<SampleLine>& lines, std::size_t i, double dt) {
  for (std::size_t j = i + 1; j < lines.size(); ++j)
    if (std::abs(lines[j].t - lines[i].t) >= dt) return j;
  for (std::size_t j = i; j-- > 0;)
    if (std::abs(lines[j].t - lines[i].t) >= dt) return j;
  return static_cast<std::size_t>(-1);
}

}  // namespace

HolderReport holder_quotient(const PhysicalSamples& samples, double beta, int n_pairs) {
  if (!(beta > 0.0 && beta <= 1.0)) throw InvariantError("Hölder exponent must be in (0, 1]");
  if (n_pairs < 30) throw InvariantError("need at least 30 pairs for a meaningful quotient");

  std::vector<SampleLine> lines;
  const double L = build_lines(samples, lines);

  // Steepest adjacent gradient marks the (approximate) blowup locus.
  std::size_t locus_line = 0;
  double locus_x = 0.5, steepest = -1.0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    for (std::size_t k = 1; k < l.x.size(); ++k) {
      const double dx = l.x[k] - l.x[k - 1];
      if (!(dx > 0.0)) continue;
      const double g = std::abs(l.u[k] - l.u[k - 1]) / dx;
      if (g > steepest) {
        steepest = g;
        locus_line = i;
        locus_x = 0.5 * (l.x[k] + l.x[k - 1]);
      }
    }
  }

  // Typical spacing bounds the smallest meaningful separation.
  double h_typ;
  {
    const auto& mid = lines[lines.size() / 2];
    h_typ = 1.0 / static_cast<double>(mid.x.size() - 1);
    double mx = 0.0;
    for (std::size_t k = 1; k < mid.x.size(); ++k) mx = std::max(mx, mid.x[k] - mid.x[k - 1]);
    h_typ = std::max(h_typ, mx);
  }
  std::vector<double> deltas;
  for (int m = 2; m <= 8; ++m) {
    const double d = std::ldexp(1.0, -m);
    if (d >= 2.0 * h_typ) deltas.push_back(d);
  }
  if (deltas.empty()) deltas.push_back(std::max(2.0 * h_typ, 1.0 / 256.0));

  HolderReport rep;
  rep.beta = beta;
  rep.window_scale = L;

  const std::size_t per_cell = std::max<std::size_t>(
      2, static_cast<std::size_t>(n_pairs) / (deltas.size() * 3 * 2));

  auto record = [&](double& slot, double du, double dist) {
    if (!(dist > 0.0) || dist > 1.0) return;
    const double q = std::abs(du) / std::pow(dist, beta);
    slot = std::max(slot, q);
    ++rep.pairs;
  };

  for (const double delta : deltas) {
    // Deterministic centers: half clustered around the locus at this scale,
    // half spread across the window.
    std::vector<std::pair<std::size_t, double>> centers;  // (line, x-center)
    for (std::size_t j = 0; j < per_cell; ++j) {
      const double off = (j % 2 == 0 ? 1.0 : -1.0) * 0.5 * delta *
                         static_cast<double>((j + 1) / 2);
      centers.emplace_back(locus_line, std::clamp(locus_x + off, 0.0, 1.0 - delta));
    }
    for (std::size_t j = 0; j < per_cell; ++j) {
      const double c = (static_cast<double>(j) + 0.5) / static_cast<double>(per_cell) *
                       (1.0 - delta);
      centers.emplace_back(j % lines.size(), c);
    }

    for (const auto& [li, c] : centers) {
      const auto& l = lines[li];
      // Equal-t pair at separation ~delta.
      {
        std::size_t k1 = lower_index(l.x, c);
        if (k1 >= l.x.size()) k1 = l.x.size() - 1;
        std::size_t k2 = lower_index(l.x, l.x[k1] + delta);
        if (k2 >= l.x.size()) k2 = l.x.size() - 1;
        if (k2 > k1) record(rep.x_quotient, l.u[k2] - l.u[k1], l.x[k2] - l.x[k1]);
      }
      // Equal-x pair across lines at time separation >= delta.
      {
        const std::size_t j2 = line_at_dt(lines, li, delta);
        if (j2 != static_cast<std::size_t>(-1)) {
          const double dt = std::abs(lines[j2].t - l.t);
          record(rep.t_quotient, line_interp(lines[j2], c) - line_interp(l, c), dt);
        }
      }
      // Mixed (diagonal) pair.
      {
        const double d = delta / std::sqrt(2.0);
        const std::size_t j2 = line_at_dt(lines, li, d);
        if (j2 != static_cast<std::size_t>(-1)) {
          const double dt = std::abs(lines[j2].t - l.t);
          const double x2 = (c + d <= 1.0) ? c + d : c - d;
          record(rep.mixed_quotient, line_interp(lines[j2], x2) - line_interp(l, c),
                 std::hypot(dt, d));
        }
      }
    }
  }

  rep.overall = std::max({rep.x_quotient, rep.t_quotient, rep.mixed_quotient});
  return rep;
}

double holder_refinement_ratio(const HolderReport& coarse, const HolderReport& fine) {
  if (!(coarse.overall > 0.0))
    throw InvariantError("refinement ratio needs a positive coarse quotient");
  return fine.overall / coarse.overall;
}

double convergence_order(std::span<const std::pair<double, double>> runs) {
  if (runs.size() < 3) throw InvariantError("convergence order needs at least three runs");
  std::vector<double> hs, errs;
  hs.reserve(runs.size());
  errs.reserve(runs.size());
  for (const auto& [h, e] : runs) {
    if (!(h > 0.0)) throw InvariantError("convergence order needs positive step sizes");
    if (!(e > 0.0)) throw InvariantError("convergence order needs positive errors");
    hs.push_back(h);
    errs.push_back(e);
  }
  return loglog_slope(hs, errs);
}

}  // namespace charwave
