#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "charwave/errors.hpp"
#include "charwave/model.hpp"
#include "charwave/unichar.hpp"
#include "charwave/verify.hpp"
#include "charwave/wavechar.hpp"

using namespace charwave;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Synthetic sample set: n_lines constant-t lines sharing one x-lattice.
PhysicalSamples synthetic(const RealFn& u, int n_lines = 3, int n_x = 257,
                          double x_lo = 0.0, double x_hi = 1.0) {
  PhysicalSamples s;
  for (int l = 0; l < n_lines; ++l) {
    const double t = 0.1 * l;
    for (int k = 0; k < n_x; ++k) {
      const double x = x_lo + (x_hi - x_lo) * k / (n_x - 1);
      s.rows.push_back({t, x, u(x), 0.0, 0.0});
    }
  }
  return s;
}

}  // namespace

TEST_CASE("d'Alembert closed form: frozen values") {
  // Oracle: tools/oracles/closed_forms.py
  const auto sech = [](double x) { return 1.0 / std::cosh(x); };
  const auto dsech = [sech](double x) { return -std::tanh(x) * sech(x); };
  // u1 = u0' telescopes into the pure left-mover sech(x + t).
  CHECK(dalembert_exact(1.0, sech, dsech, 0.3, 0.7) ==
        doctest::Approx(0.6480542736638854).epsilon(1e-12));
  // u0 = 0, u1 = 1, c = 2: u = t regardless of x.
  CHECK(dalembert_exact(2.0, [](double) { return 0.0; }, [](double) { return 1.0; }, 1.3,
                        0.7) == doctest::Approx(0.7).epsilon(1e-13));
  // Standing average of two pulses.
  CHECK(dalembert_exact(1.0, sech, [](double) { return 0.0; }, 0.2, 0.5) ==
        doctest::Approx(0.87666668594656166).epsilon(1e-12));
  // Even data with zero velocity is even in x.
  CHECK(dalembert_exact(1.0, sech, [](double) { return 0.0; }, -0.2, 0.5) ==
        doctest::Approx(dalembert_exact(1.0, sech, [](double) { return 0.0; }, 0.2, 0.5))
            .epsilon(1e-13));
  CHECK_THROWS_AS(dalembert_exact(0.0, sech, dsech, 0.0, 1.0), InvariantError);
}

TEST_CASE("Riccati blowup time: closed forms and rejection") {
  // Oracle: tools/oracles/closed_forms.py
  auto t_star = [](const char* name, double lambda) {
    return riccati_blowup_time(builtin_model1(name, lambda));
  };
  REQUIRE(t_star("burgers-flux", 0.25).has_value());
  CHECK(*t_star("burgers-flux", 0.25) == doctest::Approx(4.0).epsilon(1e-5));
  CHECK(*t_star("burgers-flux", 0.5) == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(*t_star("smooth-parabola", 0.5) ==
        doctest::Approx(7.1536704745915196).epsilon(1e-5));
  // Linear flux: f'' = 0, no focusing, no blowup.
  CHECK_FALSE(t_star("linear-transport", 0.5).has_value());

  SUBCASE("monotone data never blows up") {
    ModelSpec1 spec = builtin_model1("burgers-flux", 0.5);
    spec.data.u0 = [](double x) { return std::tanh(x); };
    spec.data.du0 = [](double x) { const double s = 1.0 / std::cosh(x); return s * s; };
    CHECK_FALSE(riccati_blowup_time(spec).has_value());
  }
  SUBCASE("non-constant f'' is refused, not mis-measured") {
    ModelSpec1 spec = builtin_model1("burgers-flux", 0.5);
    spec.flux = {"cubic", [](double u) { return u * u * u; },
                 [](double u) { return 3.0 * u * u; }, [](double u) { return 6.0 * u; }};
    CHECK_THROWS_AS(riccati_blowup_time(spec), NotApplicableError);
  }
}

TEST_CASE("FD gradient transport: exact advection for the linear flux") {
  const ModelSpec1 spec = builtin_model1("linear-transport", 0.5);
  const FDSolution fd = fd_solve_uni(spec, {5.0, 2048, 0.5}, 1.0);
  CHECK(fd.t.front() == 0.0);
  CHECK(fd.t.back() == doctest::Approx(1.0).epsilon(1e-12));
  // Initial reconstruction: u(x,0) = int_0^x u0' = u0.
  double err0 = 0.0;
  for (std::size_t k = 0; k < fd.x.size(); ++k)
    err0 = std::max(err0, std::abs(fd.u.at(0, k) - spec.data.u0(fd.x[k])));
  CHECK(err0 < 1e-5);
  // Final level: pure translation u0(x - t) (zero inflow at x = 0).
  double err1 = 0.0;
  const std::size_t last = fd.t.size() - 1;
  for (std::size_t k = 0; k < fd.x.size(); ++k)
    err1 = std::max(err1, std::abs(fd.u.at(last, k) - spec.data.u0(fd.x[k] - 1.0)));
  CHECK(err1 < 6e-3);  // first-order upwind at this resolution
}

TEST_CASE("FD gradient transport refuses to cross the blowup") {
  const ModelSpec1 spec = builtin_model1("burgers-flux", 0.5);  // t* = 2
  CHECK_THROWS_AS(fd_solve_uni(spec, {5.5, 512, 0.5}, 3.0), PreBlowupOnlyError);
  CHECK_NOTHROW(fd_solve_uni(spec, {5.5, 256, 0.5}, 0.5));
}

TEST_CASE("FD lattice validation") {
  const ModelSpec1 spec = builtin_model1("burgers-flux", 0.5);
  CHECK_THROWS_AS(fd_solve_uni(spec, {5.0, 8, 0.5}, 0.1), InvariantError);
  CHECK_THROWS_AS(fd_solve_uni(spec, {5.0, 256, 1.2}, 0.1), StabilityError);
  CHECK_THROWS_AS(fd_solve_uni(spec, {5.0, 256, 0.0}, 0.1), StabilityError);
  const ModelSpec2 wspec = builtin_model2("unit-speed", 0.5);
  CHECK_THROWS_AS(fd_solve_wave(wspec, {3.0, 0.01, 1.2}, 0.1), StabilityError);
  CHECK_THROWS_AS(fd_solve_wave(wspec, {-1.0, 0.01, 0.5}, 0.1), InvariantError);
}

TEST_CASE("FD leapfrog matches d'Alembert at constant speed") {
  const ModelSpec2 spec = builtin_model2("unit-speed", 0.5);
  const FDSolution fd = fd_solve_wave(spec, {3.0, 6.0 / 1024, 0.5}, 0.75);
  const std::size_t last = fd.t.size() - 1;
  double worst = 0.0;
  for (std::size_t k = 0; k < fd.x.size(); ++k) {
    if (std::abs(fd.x[k]) > 3.0) continue;
    const double exact =
        dalembert_exact(1.0, spec.data.u0, spec.data.u1, fd.x[k], fd.t[last]);
    worst = std::max(worst, std::abs(fd.u.at(last, k) - exact));
  }
  CHECK(worst < 1e-4);
  CHECK(fd.cfl <= 0.5 + 1e-12);
}

TEST_CASE("FD snapshot store stays bounded and keeps the endpoints") {
  const ModelSpec2 spec = builtin_model2("unit-speed", 0.5);
  const FDSolution fd = fd_solve_wave(spec, {3.0, 6.0 / 4096, 0.5}, 1.0);
  CHECK(fd.t.size() <= 2050);
  CHECK(fd.t.size() > 100);
  CHECK(fd.t.front() == 0.0);
  CHECK(fd.t.back() == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t k = 1; k < fd.t.size(); ++k) CHECK(fd.t[k] > fd.t[k - 1]);
  CHECK(fd.u.ni == fd.t.size());
  CHECK(fd.u.nj == fd.x.size());
}

TEST_CASE("compare_fields: zero on self, strict windows") {
  const ModelSpec1 spec = builtin_model1("linear-transport", 0.5);
  const FDSolution fd = fd_solve_uni(spec, {4.0, 256, 0.5}, 0.5);
  const Window w{0.0, 0.5, 0.0, 4.0};
  const FieldDiff self = compare_fields(fd, fd, w);
  CHECK(self.linf == 0.0);
  CHECK(self.l2 == 0.0);
  CHECK(self.count > 0);

  const FieldDiff s2 = compare_fields(fd_to_samples(fd), fd, w);
  CHECK(s2.linf == 0.0);
  CHECK(s2.count > 0);

  CHECK_THROWS_AS(compare_fields(fd, fd, Window{7.0, 9.0, 0.0, 1.0}), WindowError);

  SUBCASE("degenerate single-time window works") {
    const double tl = fd.t[fd.t.size() / 2];
    const FieldDiff line = compare_fields(fd, fd, Window{tl, tl, 0.0, 4.0});
    CHECK(line.count > 0);
    CHECK(line.linf == 0.0);
  }
  SUBCASE("flattened samples carry the physical axes") {
    const PhysicalSamples s = fd_to_samples(fd);
    CHECK(s.rows.size() == fd.t.size() * fd.x.size());
    CHECK(std::string(s.a_name) == "x");
    CHECK(std::string(s.b_name) == "t");
  }
}

TEST_CASE("Holder quotient: analytic fields") {
  // Oracle: tools/oracles/holder_synthetic.py
  SUBCASE("sqrt(x) at beta = 1/2 has quotient exactly 1") {
    const HolderReport rep = holder_quotient(synthetic([](double x) { return std::sqrt(x); }),
                                             0.5, 400);
    CHECK(rep.overall == doctest::Approx(1.0).epsilon(2e-2));
    CHECK(rep.x_quotient == doctest::Approx(1.0).epsilon(2e-2));
    CHECK(rep.pairs >= 30);
    CHECK(rep.beta == 0.5);
    CHECK(rep.t_quotient == doctest::Approx(0.0));  // u is t-independent
  }
  SUBCASE("linear field at beta = 1") {
    const HolderReport rep =
        holder_quotient(synthetic([](double x) { return x; }), 1.0, 400);
    CHECK(rep.overall == doctest::Approx(1.0).epsilon(2e-2));
  }
  SUBCASE("zero field has zero quotient (legitimately degenerate values)") {
    const HolderReport rep =
        holder_quotient(synthetic([](double) { return 0.0; }), 0.5, 400);
    CHECK(rep.overall == 0.0);
  }
  SUBCASE("quotient is non-decreasing in beta on the same field") {
    // Dense lattice so the dyadic separations reach 2^-8 (needs 2h <= 2^-8);
    // the frozen brute-force extrema are attained at separations 2^-2 and 2^-8.
    const PhysicalSamples s = synthetic([](double x) { return std::sqrt(x); }, 3, 1025);
    const double q4 = holder_quotient(s, 0.4, 400).overall;
    const double q5 = holder_quotient(s, 0.5, 400).overall;
    const double q6 = holder_quotient(s, 0.6, 400).overall;
    CHECK(q4 <= q5 + 1e-12);
    CHECK(q5 <= q6 + 1e-12);
    // Frozen brute-force values: 0.8706 and 1.7411.
    CHECK(q4 == doctest::Approx(0.87055056329612424).epsilon(3e-2));
    CHECK(q6 == doctest::Approx(1.7411011265922482).epsilon(3e-2));
  }
}

TEST_CASE("Holder quotient: argument and geometry validation") {
  const PhysicalSamples good = synthetic([](double x) { return x; });
  CHECK_THROWS_AS(holder_quotient(good, 0.0, 400), InvariantError);
  CHECK_THROWS_AS(holder_quotient(good, 1.2, 400), InvariantError);
  CHECK_THROWS_AS(holder_quotient(good, 0.5, 10), InvariantError);
  // Two lines only.
  CHECK_THROWS_AS(holder_quotient(synthetic([](double x) { return x; }, 2), 0.5, 400),
                  DegenerateSamplesError);
  // Lines that share no x-window.
  PhysicalSamples disjoint = synthetic([](double x) { return x; }, 2);
  for (int k = 0; k < 64; ++k)
    disjoint.rows.push_back({0.7, 5.0 + 0.01 * k, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(holder_quotient(disjoint, 0.5, 400), DegenerateSamplesError);
  // Non-monotone x within a line.
  PhysicalSamples shuffled = synthetic([](double x) { return x; });
  std::swap(shuffled.rows[3], shuffled.rows[4]);
  CHECK_THROWS_AS(holder_quotient(shuffled, 0.5, 400), DegenerateSamplesError);
}

TEST_CASE("Holder refinement ratio") {
  HolderReport coarse, fine;
  coarse.overall = 2.0;
  fine.overall = 2.2;
  CHECK(holder_refinement_ratio(coarse, fine) == doctest::Approx(1.1));
  coarse.overall = 0.0;
  CHECK_THROWS_AS(holder_refinement_ratio(coarse, fine), InvariantError);
}

TEST_CASE("convergence_order on an exact power law") {
  const std::vector<std::pair<double, double>> runs{
      {0.1, 0.04}, {0.05, 0.01}, {0.025, 0.0025}};
  CHECK(convergence_order(runs) == doctest::Approx(2.0).epsilon(1e-10));
  const std::vector<std::pair<double, double>> two{{0.1, 0.04}, {0.05, 0.01}};
  CHECK_THROWS_AS(convergence_order(two), InvariantError);
  const std::vector<std::pair<double, double>> bad{{0.1, 0.04}, {0.05, 0.01}, {-1.0, 0.1}};
  CHECK_THROWS_AS(convergence_order(bad), InvariantError);
}

TEST_CASE("dual route: characteristic solver vs FD oracle, unidirectional") {
  const ModelSpec1 spec = builtin_model1("burgers-flux", 0.5);  // t* = 2
  auto linf_at = [&](int n) {
    const Grid1 grid = make_grid1(spec, n);
    const SolveResult1 res = solve_semilinear(spec, grid, {});
    const InverseResult1 inv = inverse_transform(spec, grid, res.state);
    // Nearest grid time to 0.25 t*.
    int i_line = 0;
    for (int i = 0; i < grid.n; ++i)
      if (std::abs(grid.T[i] - 0.5) < std::abs(grid.T[i_line] - 0.5)) i_line = i;
    const double t_line = grid.T[i_line];
    const FDSolution fd = fd_solve_uni(spec, {spec.r + 1.0, 2 * n, 0.5}, t_line);
    const Window w{t_line, t_line, 0.0, 0.85 * spec.r};
    return compare_fields(inv.samples, fd, w).linf;
  };
  const double coarse = linf_at(128);
  const double fine = linf_at(256);
  CHECK(fine < 1e-2);
  CHECK(fine < coarse / 1.5);
}

TEST_CASE("dual route: characteristic solver vs FD oracle, wave") {
  const ModelSpec2 spec = builtin_model2("paper-fig", 0.25);
  const FDSolution fd = fd_solve_wave(spec, {spec.r, 6.0 / 1024, 0.5}, 0.75);
  auto linf_at = [&](int n) {
    const double span = spec.r + 2.0;
    const InitialCurve curve = build_initial_curve(spec, -span, span, 4097);
    const Grid2 grid = make_grid2(spec, curve, n);
    const SolveResult2 res = picard_solve(spec, grid, {});
    const InverseResult2 inv = inverse_transform2(spec, grid, res.state);
    const Window w{0.5, 0.75, -0.8 * spec.r, 0.8 * spec.r};
    return compare_fields(inv.samples, fd, w).linf;
  };
  const double coarse = linf_at(96);
  const double fine = linf_at(192);
  CHECK(fine < 2e-3);
  CHECK(fine < coarse / 1.5);
}
