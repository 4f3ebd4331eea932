// Benchmark: line-parallel Picard kernels against the serial reference.
// The parallel path must be bit-identical (disjoint line writes, serial
// reductions), so the comparison checks equality as well as timing.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "charwave/model.hpp"
#include "charwave/parallel.hpp"
#include "charwave/unichar.hpp"
#include "charwave/wavechar.hpp"

#ifdef CHARWAVE_HAVE_OPENMP
#include <omp.h>
#endif

using namespace charwave;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool fields_equal(const Field& a, const Field& b) {
  return a.ni == b.ni && a.nj == b.nj &&
         std::memcmp(a.a.data(), b.a.data(), a.a.size() * sizeof(double)) == 0;
}

void bench_unidirectional(int n) {
  const auto spec = builtin_model1("burgers-flux", 0.25, 6.5);
  const auto grid = make_grid1(spec, n);
  SolveOptions opts;

  opts.exec = Exec::Serial;
  auto t0 = std::chrono::steady_clock::now();
  const auto serial = solve_semilinear(spec, grid, opts);
  const double ts = seconds_since(t0);

  opts.exec = Exec::Par;
  t0 = std::chrono::steady_clock::now();
  const auto par = solve_semilinear(spec, grid, opts);
  const double tp = seconds_since(t0);

  const bool same = fields_equal(serial.state.u, par.state.u) &&
                    fields_equal(serial.state.v, par.state.v) &&
                    fields_equal(serial.state.xi, par.state.xi);
  std::printf("%-16s %6d  %9.3fs  %9.3fs  %6.2fx  %s\n", "unidirectional", n, ts, tp,
              ts / tp, same ? "bit-identical" : "MISMATCH");
}

void bench_wave(int n) {
  const auto spec = builtin_model2("paper-fig", 0.25, 3.0);
  const auto curve = build_initial_curve(spec, -5.0, 5.0, 4097);
  const auto grid = make_grid2(spec, curve, n);
  SolveOptions opts;

  opts.exec = Exec::Serial;
  auto t0 = std::chrono::steady_clock::now();
  const auto serial = picard_solve(spec, grid, opts);
  const double ts = seconds_since(t0);

  opts.exec = Exec::Par;
  t0 = std::chrono::steady_clock::now();
  const auto par = picard_solve(spec, grid, opts);
  const double tp = seconds_since(t0);

  const bool same = fields_equal(serial.state.u, par.state.u) &&
                    fields_equal(serial.state.w, par.state.w) &&
                    fields_equal(serial.state.v, par.state.v) &&
                    fields_equal(serial.state.p, par.state.p) &&
                    fields_equal(serial.state.q, par.state.q);
  std::printf("%-16s %6d  %9.3fs  %9.3fs  %6.2fx  %s\n", "wave", n, ts, tp, ts / tp,
              same ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
  apply_thread_cap_from_env();
#ifdef CHARWAVE_HAVE_OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif
  std::printf("%-16s %6s  %10s  %10s  %7s  %s\n", "kernel", "n", "serial", "parallel",
              "speedup", "equality");
  bench_unidirectional(256);
  bench_unidirectional(512);
  bench_wave(192);
  bench_wave(384);
  return 0;
}
