#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "charwave/errors.hpp"
#include "charwave/model.hpp"
#include "charwave/wavechar.hpp"

using namespace charwave;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct WaveSetup {
  ModelSpec2 spec;
  InitialCurve curve;
  Grid2 grid;
};

WaveSetup make_setup(const std::string& name, double lambda, int n) {
  WaveSetup s{builtin_model2(name, lambda), {}, {}};
  const double span = s.spec.r + 2.0;
  s.curve = build_initial_curve(s.spec, -span, span, 4097);
  s.grid = make_grid2(s.spec, s.curve, n);
  return s;
}

}  // namespace

TEST_CASE("initial curve: monotone axes and frozen coordinates") {
  const ModelSpec2 spec = builtin_model2("paper-fig", 0.25);
  const InitialCurve curve = build_initial_curve(spec, -5.0, 5.0, 4097);
  REQUIRE(curve.x.size() == 4097);

  for (std::size_t k = 1; k < curve.x.size(); ++k) {
    CHECK(curve.X[k] > curve.X[k - 1]);  // X strictly ascending
    CHECK(curve.Y[k] < curve.Y[k - 1]);  // Y strictly descending
  }
  // The curve passes through the origin: x = 0 maps to (X, Y) = (0, 0).
  const std::size_t mid = 2048;
  CHECK(curve.x[mid] == doctest::Approx(0.0));
  CHECK(curve.X[mid] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(curve.Y[mid] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(curve.u[mid] == doctest::Approx(1.0));  // sech(0)
  CHECK(curve.w[mid] == doctest::Approx(0.0).epsilon(1e-12));

  // Frozen stretch integrals at x = 1 (oracle: tools/oracles/coordinate_maps.py):
  // X(1) = 3.1883121274734319, Y(1) = -1.0144493456506179, and the angle there
  // is w0(1) = 2 atan R0(1) = -1.6881034457927417.
  const InitialCurve::Point p = curve.at_X(3.1883121274734319);
  CHECK(p.x == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(p.Y == doctest::Approx(-1.0144493456506179).epsilon(1e-5));
  CHECK(p.w == doctest::Approx(-1.6881034457927417).epsilon(1e-4));
  CHECK(curve.phi(3.1883121274734319) == doctest::Approx(-1.0144493456506179).epsilon(1e-5));
  CHECK(curve.phi_inv(-1.0144493456506179) == doctest::Approx(3.1883121274734319).epsilon(1e-5));

  SUBCASE("lookups clamp at the curve ends") {
    const InitialCurve::Point lo = curve.at_X(curve.X.front() - 100.0);
    CHECK(lo.x == doctest::Approx(curve.x.front()));
    const InitialCurve::Point hi = curve.at_X(curve.X.back() + 100.0);
    CHECK(hi.x == doctest::Approx(curve.x.back()));
  }
}

TEST_CASE("grid construction: mask follows the curve; spans are enforced") {
  const WaveSetup s = make_setup("paper-fig", 0.25, 48);
  const Grid2& g = s.grid;
  CHECK(g.X.back() == doctest::Approx(3.0));
  CHECK(g.Y.back() == doctest::Approx(3.0));
  const double tol = 1e-9 * (1.0 + g.r);
  for (int i = 0; i < g.n; ++i) {
    CHECK(g.row_start[i].X == doctest::Approx(g.X[i]).epsilon(1e-9));
    for (int j = 0; j < g.n; ++j)
      if (g.inside(i, j)) CHECK(g.Y[j] >= s.curve.phi(g.X[i]) - g.hY - tol);
  }
  for (int j = 0; j < g.n; ++j)
    CHECK(g.col_start[j].Y == doctest::Approx(g.Y[j]).epsilon(1e-9));

  SUBCASE("a curve that does not span the domain is rejected") {
    const ModelSpec2 spec = builtin_model2("paper-fig", 0.25);
    const InitialCurve small = build_initial_curve(spec, -0.5, 0.5, 257);
    CHECK_THROWS_AS(make_grid2(spec, small, 32), InvariantError);
  }
}

TEST_CASE("wave right-hand sides: frozen values, balance, periodicity") {
  // Oracle: tools/oracles/riemann_and_rhs.py
  const ModelSpec2 fig = builtin_model2("paper-fig", 0.25);
  const ModelSpec2 unit = builtin_model2("unit-speed", 0.5);

  SUBCASE("constant speed kills every component except the u-derivatives") {
    const Rhs2 r = rhs_wave(0.0, kPi / 2.0, 0.0, 1.0, 1.0, unit);
    CHECK(r.u_X == doctest::Approx(0.25).epsilon(1e-15));  // sin(w) p / (4c), C^0 = 1
    CHECK(r.u_Y == doctest::Approx(0.0));
    CHECK(r.w_Y == 0.0);
    CHECK(r.v_X == 0.0);
    CHECK(r.p_Y == 0.0);
    CHECK(r.q_X == 0.0);
    const Rhs2 ry = rhs_wave(0.0, 0.0, kPi / 2.0, 1.0, 2.0, unit);
    CHECK(ry.u_Y == doctest::Approx(0.5).epsilon(1e-15));
  }

  SUBCASE("frozen spot values on the variable-speed model") {
    const Rhs2 r = rhs_wave(0.3, 0.9, -0.4, 1.2, 0.8, fig);
    CHECK(r.u_X == doctest::Approx(0.13777199157243165).epsilon(1e-13));
    CHECK(r.u_Y == doctest::Approx(-0.054092590906526833).epsilon(1e-13));
    CHECK(r.w_Y == doctest::Approx(0.00068480825253785148).epsilon(1e-12));
    CHECK(r.v_X == doctest::Approx(0.0086411491719070961).epsilon(1e-13));
    CHECK(r.p_Y == doctest::Approx(0.017000566891592259).epsilon(1e-13));
    CHECK(r.q_X == doctest::Approx(-0.01435055358664829).epsilon(1e-13));
  }

  SUBCASE("pointwise balance identity Cw^e p_Y + Cv^e q_X = 0") {
    const double e = fig.lambda.rhs_exponent();
    for (double w : {-3.0, -1.1, 0.4, 2.9})
      for (double v : {-2.5, 0.2, 1.8}) {
        const Rhs2 r = rhs_wave(0.4, w, v, 1.1, 0.9, fig);
        const double cw = std::cos(0.5 * w), cv = std::cos(0.5 * v);
        const double bal = cos2_pow(cw * cw, e) * r.p_Y + cos2_pow(cv * cv, e) * r.q_X;
        CHECK(bal == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(std::abs(bal) < 1e-15);
      }
  }

  SUBCASE("2 pi shifts of w and v leave the right-hand side unchanged") {
    const Rhs2 a = rhs_wave(0.3, 0.9, -0.4, 1.2, 0.8, fig);
    const Rhs2 b = rhs_wave(0.3, 0.9 + 2.0 * kPi, -0.4 - 2.0 * kPi, 1.2, 0.8, fig);
    CHECK(a.u_X == doctest::Approx(b.u_X).epsilon(1e-11));
    CHECK(a.u_Y == doctest::Approx(b.u_Y).epsilon(1e-11));
    CHECK(a.w_Y == doctest::Approx(b.w_Y).epsilon(1e-9));
    CHECK(a.v_X == doctest::Approx(b.v_X).epsilon(1e-9));
    CHECK(a.p_Y == doctest::Approx(b.p_Y).epsilon(1e-9));
    CHECK(a.q_X == doctest::Approx(b.q_X).epsilon(1e-9));
  }
}

TEST_CASE("constant speed: characteristic fields are exactly transported") {
  const WaveSetup s = make_setup("unit-speed", 0.5, 96);
  const SolveResult2 res = picard_solve(s.spec, s.grid, {});
  REQUIRE(res.history.converged);
  // c' = 0 makes w, v, p, q constant along their integration lines, and the
  // quadrature of an identically-zero right-hand side is exact.
  for (int i = 0; i < s.grid.n; ++i)
    for (int j = 0; j < s.grid.n; ++j) {
      if (!s.grid.inside(i, j)) continue;
      CHECK(res.state.p.at(i, j) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(res.state.q.at(i, j) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(res.state.w.at(i, j) ==
            doctest::Approx(s.grid.row_start[i].w).epsilon(1e-12));
      CHECK(res.state.v.at(i, j) ==
            doctest::Approx(s.grid.col_start[j].v).epsilon(1e-12));
    }
}

TEST_CASE("constant speed: recovered solution matches the left-mover") {
  // unit-speed launches u(x,t) = sech(x + t) exactly (u1 = u0').
  const WaveSetup s = make_setup("unit-speed", 0.5, 96);
  const SolveResult2 res = picard_solve(s.spec, s.grid, {});
  const InverseResult2 inv = inverse_transform2(s.spec, s.grid, res.state);
  double worst = 0.0;
  for (const auto& row : inv.samples.rows) {
    CHECK(row.t >= -1e-12);
    worst = std::max(worst, std::abs(row.u - 1.0 / std::cosh(row.x + row.t)));
  }
  CHECK(worst < 3e-3);
  CHECK(inv.path_mismatch < 1e-3);
}

TEST_CASE("reference pulse: converged, positive p/q, no blowup in the window") {
  const WaveSetup s = make_setup("paper-fig", 0.25, 128);
  const SolveResult2 res = picard_solve(s.spec, s.grid, {});
  REQUIRE(res.history.converged);
  CHECK(res.history.iterations <= 200);
  CHECK(res.history.positivity_events.empty());

  const auto& rows = res.history.rows;
  for (std::size_t k = 2; k < rows.size(); ++k)
    CHECK(rows[k].weighted <= rows[k - 1].weighted * (1.0 + 1e-9));

  const InverseResult2 inv = inverse_transform2(s.spec, s.grid, res.state);
  const BlowupReport2 rep = detect_blowup2(s.grid, res.state, kPi - 1e-3, &inv);
  CHECK_FALSE(rep.detected);
  // The angle stays well below pi on this domain (measured ~0.56 pi) while
  // p and q hold a uniform positive floor (measured ~0.88).
  CHECK(rep.w_sup / kPi > 0.50);
  CHECK(rep.w_sup / kPi < 0.62);
  CHECK(rep.p_min > 0.80);
  CHECK(rep.p_min < 0.95);
  CHECK(rep.q_min > 0.80);
  CHECK(rep.p_max < 1.5);
  CHECK(rep.q_max < 1.5);
  CHECK(inv.path_mismatch < 1.5e-3);  // measured 1.006e-3 at n = 128
  CHECK(balance_residual(s.spec, s.grid, res.state) < 2e-3);

  // The report's running extrema agree with the final history row.
  CHECK(rep.p_min == doctest::Approx(rows.back().p_min).epsilon(1e-9));
  CHECK(rep.q_max == doctest::Approx(rows.back().q_max).epsilon(1e-9));
}

TEST_CASE("focusing pulse: the angle crosses pi inside the domain") {
  const WaveSetup s = make_setup("focusing-pulse", 0.5, 128);
  const SolveResult2 res = picard_solve(s.spec, s.grid, {});
  REQUIRE(res.history.converged);
  const InverseResult2 inv = inverse_transform2(s.spec, s.grid, res.state);
  const BlowupReport2 rep = detect_blowup2(s.grid, res.state, kPi - 1e-3, &inv);
  CHECK(rep.detected);
  CHECK(rep.w_sup >= kPi - 1e-3);
  CHECK(rep.variable == "w");
  CHECK(rep.mapped);
  CHECK(rep.t > 0.0);
  CHECK(rep.p_min > 0.0);
  CHECK(rep.q_min > 0.0);
}

TEST_CASE("balance residual shrinks under refinement") {
  auto residual = [](int n) {
    const WaveSetup s = make_setup("paper-fig", 0.25, n);
    const SolveResult2 res = picard_solve(s.spec, s.grid, {});
    return balance_residual(s.spec, s.grid, res.state);
  };
  const double coarse = residual(64);
  const double fine = residual(128);
  CHECK(fine < coarse / 1.4);
}

TEST_CASE("non-convergence throws unless asked to report instead") {
  const WaveSetup s = make_setup("paper-fig", 0.25, 32);
  SolveOptions opts;
  opts.tol = 0.0;
  opts.max_iter = 2;
  CHECK_THROWS_AS(picard_solve(s.spec, s.grid, opts), FixedPointDivergenceError);
  opts.throw_on_divergence = false;
  const SolveResult2 res = picard_solve(s.spec, s.grid, opts);
  CHECK_FALSE(res.history.converged);
  CHECK(res.history.rows.size() == 2);
}

TEST_CASE("regime label covers (0, 1/3] only") {
  CHECK(wave_regime_label(LambdaParam::make(0.25)) == "Holder13");
  CHECK(wave_regime_label(LambdaParam::make(1.0 / 3.0)) == "Holder13");
  CHECK(wave_regime_label(LambdaParam::make(0.4)) == "Unsupported");
  CHECK(wave_regime_label(LambdaParam::make(0.5)) == "Unsupported");
}

TEST_CASE("p/q stability sweep: extrema settle under refinement") {
  const ModelSpec2 spec = builtin_model2("paper-fig", 0.25);
  const double span = spec.r + 2.0;
  const InitialCurve curve = build_initial_curve(spec, -span, span, 4097);
  std::vector<Grid2> grids;
  grids.push_back(make_grid2(spec, curve, 96));
  grids.push_back(make_grid2(spec, curve, 128));
  const SweepReport rep = pq_stability_sweep(spec, grids, {});
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.regime == "Holder13");
  CHECK(rep.pq_cauchy);
  for (const SweepRow& row : rep.rows) {
    CHECK(row.converged);
    CHECK(row.p_min > 0.0);
    CHECK_FALSE(row.detected);
  }
  CHECK_THROWS_AS(pq_stability_sweep(spec, {grids[0]}, SolveOptions{}), InvariantError);
}

TEST_CASE("default weight exponent") {
  CHECK(default_kappa2(builtin_model2("unit-speed", 0.25)) == doctest::Approx(0.0));
  const double k = default_kappa2(builtin_model2("paper-fig", 0.25));
  CHECK(k > 1.0);
  CHECK(k < 100.0);
}
