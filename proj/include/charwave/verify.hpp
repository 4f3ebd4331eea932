#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "charwave/field.hpp"
#include "charwave/model.hpp"
#include "charwave/numerics.hpp"

namespace charwave {

// Independent physical-coordinate oracles (valid pre-blowup only), closed
// forms, field comparison, convergence-order estimation, and Hölder-quotient
// measurement. These deliberately share no machinery with the characteristic
// solvers they check.

struct FDLattice1 {
  double x_max = 0.0;  // spatial window [0, x_max]
  int nx = 0;
  double cfl = 0.5;
};

struct FDLattice2 {
  double x_window = 0.0;  // half-width of the comparison region around x = 0
  double dx = 0.0;
  double cfl = 0.5;
};

// Uniform-lattice solution snapshots; u is nt-by-nx over (t, x) with t the
// kept time levels (always including the initial and final ones). rho = u_x
// is carried for the unidirectional family only.
struct FDSolution {
  std::vector<double> x;
  std::vector<double> t;
  Field u;
  Field rho;
  double cfl = 0.0;
};

// Gradient-transport scheme for the unidirectional family: evolves
// rho = u_x by rho_t + f'(u) rho_x = -lambda f''(u) rho^2 (upwinded by the
// sign of f'(u), Heun steps) and reconstructs u(x,t) = int_0^x rho with
// u(0,t) = 0. Valid pre-blowup only: refuses horizons reaching the
// closed-form blowup certificate when the flux carries one (constant f''),
// and aborts past the gradient cap |rho| > 1e3 otherwise.
FDSolution fd_solve_uni(const ModelSpec1& spec, const FDLattice1& lattice, double t_end);

// Three-level leapfrog for u_tt = c(u)^2 u_xx + 2 lambda c c' (u_x)^2 with a
// Taylor first step from (u0, u1), linear outflow extrapolation, and a domain
// half-width x_window + c_max t_end so boundary effects cannot reach the
// window. CFL (measured against the running sup of c) must stay <= 0.9.
FDSolution fd_solve_wave(const ModelSpec2& spec, const FDLattice2& lattice, double t_end);

// Classical closed form for the constant-speed wave equation.
double dalembert_exact(double c0, const RealFn& u0, const RealFn& u1, double x, double t);

// Closed-form gradient blowup time for a constant second derivative of the
// flux: along characteristics dR/dt = -lambda kappa0 R^2, so the first blowup
// is at 1/(lambda kappa0 sup(-u0')); nullopt when u0' >= 0 everywhere.
// Throws NotApplicableError when f'' is not constant (1e-10 on the lattice).
std::optional<double> riccati_blowup_time(const ModelSpec1& spec);

struct Window {
  double t_lo = 0.0, t_hi = 0.0, x_lo = 0.0, x_hi = 0.0;
};

struct FieldDiff {
  double linf = 0.0;
  double l2 = 0.0;
  std::size_t count = 0;  // compared sample points
};

// Difference norms over the window; the second field is interpolated (linear
// in x and t) at the first one's sample points. Throws WindowError when no
// sample point falls in the overlap. A degenerate (zero-height) time window
// is treated as a single-time slice with one-dimensional L2 normalization.
FieldDiff compare_fields(const PhysicalSamples& a, const FDSolution& b, const Window& w);
FieldDiff compare_fields(const FDSolution& a, const FDSolution& b, const Window& w);

// Flattens an FD solution to the shared physical-sample schema (one row per
// lattice node; the characteristic-coordinate columns carry (x, t) again).
PhysicalSamples fd_to_samples(const FDSolution& fd);

// Hölder quotient measurement over deterministically stratified sample pairs
// with dyadic separations, split by direction, concentrated near the steepest
// gradient (the blowup locus when present) and spread across the window. The
// x-window is rescaled to unit length (time rescaled by the same factor), so
// quotients at different betas are comparable and the quotient is exactly
// non-decreasing in beta on a fixed pair set (all distances <= 1).
struct HolderReport {
  double beta = 0.0;
  double x_quotient = 0.0;      // pairs at equal t
  double t_quotient = 0.0;      // pairs at equal x
  double mixed_quotient = 0.0;  // diagonal pairs
  double overall = 0.0;         // max of the three
  std::size_t pairs = 0;
  double window_scale = 0.0;  // physical length of the rescaled x-window
};
HolderReport holder_quotient(const PhysicalSamples& samples, double beta, int n_pairs);

// Refinement trend: ratio of the overall quotient (fine over coarse) at equal
// beta; near 1 = stable under refinement, growing = not a Hölder-beta bound.
double holder_refinement_ratio(const HolderReport& coarse, const HolderReport& fine);

// Least-squares slope of log(error) against log(h); needs >= 3 runs with
// positive h and error.
double convergence_order(std::span<const std::pair<double, double>> runs);

}  // namespace charwave
